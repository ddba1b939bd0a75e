#include "zenocat/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zenocat/emit.hpp"
#include "zenocat/states.hpp"

namespace zenocat {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return d;
    } catch (...) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int d = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return d;
    } catch (...) {
        throw ConfigError("config: bad integer value for '" + key + "': " + v);
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: bad boolean value for '" + key + "': " + v);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: empty list for '" + key + "'");
    return out;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += emit::format_sig(v[i]);
    }
    return s;
}

}  // namespace

ReservoirSpec RunConfig::reservoir(double r_override) const {
    if (spectral_kind != "ohmic_lorentzian")
        throw ConfigError("config: unsupported spectral_kind '" + spectral_kind + "'");
    ReservoirSpec s;
    s.spectral_kind = SpectralKind::OhmicLorentzian;
    s.omega_0 = omega_0;
    s.omega_c = (r_override > 0.0) ? r_override * omega_0 : omega_c;
    s.g = g;
    if (thermal_model == "bose_einstein") {
        s.thermal_kind = ThermalKind::BoseEinstein;
        s.theta = theta;
    } else if (thermal_model == "constant_n") {
        s.thermal_kind = ThermalKind::ConstantN;
        s.n0 = n0;
    } else {
        throw ConfigError("config: unsupported thermal_model '" + thermal_model + "'");
    }
    try {
        s.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return s;
}

int RunConfig::resolved_n_max() const {
    return n_max > 0 ? n_max : default_n_max(alpha);
}

std::string RunConfig::to_text() const {
    std::ostringstream os;
    os << "[reservoir]\n";
    os << "spectral_kind = " << spectral_kind << "\n";
    os << "thermal_model = " << thermal_model << "\n";
    os << "omega_c = " << emit::format_sig(omega_c) << "\n";
    os << "omega_0 = " << emit::format_sig(omega_0) << "\n";
    os << "g = " << emit::format_sig(g) << "\n";
    os << "theta = " << emit::format_sig(theta) << "\n";
    os << "n0 = " << emit::format_sig(n0) << "\n";
    os << "\n[cat]\n";
    os << "alpha = " << emit::format_sig(alpha) << "\n";
    os << "n_max = " << n_max << "\n";
    os << "\n[schedule]\n";
    os << "omega_c_tau = " << join(omega_c_tau) << "\n";
    os << "scenario = " << scenario << "\n";
    os << "samples = " << samples << "\n";
    os << "t_max_decades = " << emit::format_sig(t_max_decades) << "\n";
    os << "\n[rates]\n";
    os << "r_values = " << join(r_values) << "\n";
    os << "tau_points = " << tau_points << "\n";
    os << "tau_min = " << emit::format_sig(tau_min) << "\n";
    os << "tau_max = " << emit::format_sig(tau_max) << "\n";
    os << "\n[wigner]\n";
    os << "r_panels = " << join(wigner_r_panels) << "\n";
    os << "n_grid = " << wigner_n_grid << "\n";
    os << "\n[pn]\n";
    os << "pn_snapshot_fractions = " << join(pn_snapshot_fractions) << "\n";
    os << "pn_max_n = " << pn_max_n << "\n";
    os << "\n[output]\n";
    os << "out_dir = " << out_dir << "\n";
    os << "svg = " << (svg ? "true" : "false") << "\n";
    os << "threads = " << threads << "\n";
    return os.str();
}

RunConfig RunConfig::from_text(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": bad section");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "reservoir" && section != "cat" && section != "schedule" &&
                section != "rates" && section != "wigner" && section != "pn" &&
                section != "output")
                throw ConfigError("config: unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (qual == "reservoir.spectral_kind") c.spectral_kind = val;
        else if (qual == "reservoir.thermal_model") c.thermal_model = val;
        else if (qual == "reservoir.omega_c") c.omega_c = parse_double(qual, val);
        else if (qual == "reservoir.omega_0") c.omega_0 = parse_double(qual, val);
        else if (qual == "reservoir.g") c.g = parse_double(qual, val);
        else if (qual == "reservoir.theta") c.theta = parse_double(qual, val);
        else if (qual == "reservoir.n0") c.n0 = parse_double(qual, val);
        else if (qual == "cat.alpha") c.alpha = parse_double(qual, val);
        else if (qual == "cat.n_max") c.n_max = parse_int(qual, val);
        else if (qual == "schedule.omega_c_tau") c.omega_c_tau = parse_list(qual, val);
        else if (qual == "schedule.scenario") c.scenario = val;
        else if (qual == "schedule.samples") c.samples = parse_int(qual, val);
        else if (qual == "schedule.t_max_decades") c.t_max_decades = parse_double(qual, val);
        else if (qual == "rates.r_values") c.r_values = parse_list(qual, val);
        else if (qual == "rates.tau_points") c.tau_points = parse_int(qual, val);
        else if (qual == "rates.tau_min") c.tau_min = parse_double(qual, val);
        else if (qual == "rates.tau_max") c.tau_max = parse_double(qual, val);
        else if (qual == "wigner.r_panels") c.wigner_r_panels = parse_list(qual, val);
        else if (qual == "wigner.n_grid") c.wigner_n_grid = parse_int(qual, val);
        else if (qual == "pn.pn_snapshot_fractions") c.pn_snapshot_fractions = parse_list(qual, val);
        else if (qual == "pn.pn_max_n") c.pn_max_n = parse_int(qual, val);
        else if (qual == "output.out_dir") c.out_dir = val;
        else if (qual == "output.svg") c.svg = parse_bool(qual, val);
        else if (qual == "output.threads") c.threads = static_cast<unsigned>(parse_int(qual, val));
        else throw ConfigError("config: unknown key '" + qual + "'");
    }

    if (c.samples < 2) throw ConfigError("config: schedule.samples must be >= 2");
    if (c.tau_points < 2) throw ConfigError("config: rates.tau_points must be >= 2");
    if (!(c.tau_min > 0.0) || !(c.tau_max > c.tau_min))
        throw ConfigError("config: rates tau grid must satisfy 0 < tau_min < tau_max");
    if (c.scenario != "shuttered" && c.scenario != "measured" && c.scenario != "markov")
        throw ConfigError("config: unknown scenario '" + c.scenario + "'");
    if (c.n_max < 0) throw ConfigError("config: cat.n_max must be >= 0");
    if (c.wigner_n_grid < 2) throw ConfigError("config: wigner.n_grid must be >= 2");
    for (double r : c.wigner_r_panels)
        if (!(r > 0.0)) throw ConfigError("config: wigner.r_panels entries must be > 0");
    for (double w : c.omega_c_tau)
        if (!(w > 0.0)) throw ConfigError("config: omega_c_tau entries must be > 0");
    (void)c.reservoir();  // validates reservoir fields
    return c;
}

RunConfig RunConfig::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

}  // namespace zenocat
