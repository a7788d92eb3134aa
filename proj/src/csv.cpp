#include "chainsim/csv.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chainsim/errors.hpp"

namespace chainsim::csv {

std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    return in;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(line);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double parse_double(const std::string& s, const std::filesystem::path& file) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number '" + s + "' in " + file.string());
    }
}

std::vector<std::array<double, 2>> read_two_columns(const std::filesystem::path& file,
                                                    const std::string& header) {
    auto in = open_in(file);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(file.string() + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header)
        throw ConfigError(file.string() + ": expected header '" + header + "', got '" + line + "'");
    std::vector<std::array<double, 2>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 2) throw ConfigError(file.string() + ": expected two columns");
        rows.push_back({parse_double(cols[0], file), parse_double(cols[1], file)});
    }
    return rows;
}

}  // namespace

void write_micro_trajectory(const std::filesystem::path& file, const MicroTrajectory& traj) {
    auto out = open_out(file);
    out << "t,i,x,omega\n";
    for (const auto& s : traj.states) {
        const Eigen::ArrayXd omega = gaps(s);
        for (Eigen::Index i = 0; i < s.x.size(); ++i) {
            out << format(s.t) << ',' << i << ',' << format(s.x[i]) << ',';
            if (i > 0) out << format(omega[i - 1]);
            out << '\n';
        }
    }
}

void write_micro_diagnostics(const std::filesystem::path& file, const MicroTrajectory& traj) {
    auto out = open_out(file);
    out << "t,xbar,variance,spread,tv_omega,omega_min,omega_max\n";
    for (const auto& d : traj.diagnostics)
        out << format(d.t) << ',' << format(d.xbar) << ',' << format(d.variance) << ','
            << format(d.spread) << ',' << format(d.tv_omega) << ',' << format(d.omega_min) << ','
            << format(d.omega_max) << '\n';
}

void write_macro_snapshots(const std::filesystem::path& file, const MacroTrajectory& traj) {
    auto out = open_out(file);
    out << "t,x,rho\n";
    for (const auto& s : traj.states)
        for (int i = 0; i < s.cells(); ++i)
            out << format(s.t) << ',' << format(s.cell_center(i)) << ',' << format(s.rho[i])
                << '\n';
}

void write_macro_diagnostics(const std::filesystem::path& file, const MacroTrajectory& traj) {
    auto out = open_out(file);
    out << "t,mass,center,l2\n";
    for (const auto& s : traj.states)
        out << format(s.t) << ',' << format(mass(s)) << ',' << format(center_of_mass(s)) << ','
            << format(l2_norm(s)) << '\n';
}

void write_shock_path(const std::filesystem::path& file, const ShockPath& path) {
    auto out = open_out(file);
    out << "t,x_star,left_flux,right_density\n";
    for (std::size_t k = 0; k < path.times.size(); ++k)
        out << format(path.times[k]) << ',' << format(path.positions[k]) << ','
            << format(path.left_flux[k]) << ',' << format(path.right_density[k]) << '\n';
}

void write_comparison(const std::filesystem::path& file,
                      const std::vector<ScaleComparison>& comparison, int n_gaps, double dx) {
    auto out = open_out(file);
    out << "t,l1_error,N,dx\n";
    for (const auto& c : comparison)
        out << format(c.t) << ',' << format(c.l1_error) << ',' << n_gaps << ',' << format(dx)
            << '\n';
}

std::vector<std::pair<double, double>> read_table_knots(const std::filesystem::path& file) {
    std::vector<std::pair<double, double>> knots;
    for (const auto& row : read_two_columns(file, "omega,f")) knots.emplace_back(row[0], row[1]);
    return knots;
}

MacroState read_density_csv(const std::filesystem::path& file) {
    const auto rows = read_two_columns(file, "x,rho");
    if (rows.size() < 5) throw ConfigError(file.string() + ": need at least 5 grid rows");
    const double dx = rows[1][0] - rows[0][0];
    if (!(dx > 0.0)) throw ConfigError(file.string() + ": x must be increasing");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (std::abs(rows[i][0] - rows[i - 1][0] - dx) > 1e-9 * std::max(1.0, std::abs(dx)))
            throw ConfigError(file.string() + ": grid spacing not uniform");
    MacroState s;
    s.dx = dx;
    s.x_left = rows[0][0] - 0.5 * dx;
    s.rho.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!(rows[i][1] >= 0.0)) throw ConfigError(file.string() + ": density must be >= 0");
        s.rho[static_cast<Eigen::Index>(i)] = rows[i][1];
    }
    return s;
}

MicroState read_positions_csv(const std::filesystem::path& file) {
    const auto rows = read_two_columns(file, "i,x");
    if (rows.size() < 2) throw ConfigError(file.string() + ": need at least two particles");
    MicroState s;
    s.x.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<std::size_t>(rows[i][0]) != i)
            throw ConfigError(file.string() + ": particle indices must run 0,1,2,...");
        s.x[static_cast<Eigen::Index>(i)] = rows[i][1];
    }
    if (!s.ordered()) throw ConfigError(file.string() + ": positions must be nondecreasing");
    return s;
}

}  // namespace chainsim::csv
