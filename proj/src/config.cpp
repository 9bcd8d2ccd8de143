#include "tgvlab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tgvlab/errors.hpp"

namespace tgvlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& message) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + message);
}

double parse_double(std::string_view v, const std::string& source, int line) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail(source, line, "expected a number, got '" + std::string(v) + "'");
    }
    return out;
}

long long parse_int(std::string_view v, const std::string& source, int line) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail(source, line, "expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

bool parse_bool(std::string_view v, const std::string& source, int line) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    fail(source, line, "expected on/off, got '" + std::string(v) + "'");
}

std::vector<int> parse_int_list(std::string_view v, const std::string& source, int line) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        const std::size_t comma = v.find(',', pos);
        const std::string_view item =
            trim(v.substr(pos, comma == std::string_view::npos ? v.size() - pos : comma - pos));
        if (item.empty()) fail(source, line, "empty entry in list");
        out.push_back(static_cast<int>(parse_int(item, source, line)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

SolverConfig parse_config(const std::string& text, const std::string& source_name) {
    SolverConfig cfg;
    std::istringstream stream(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(stream, raw_line)) {
        ++line_no;
        std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail(source_name, line_no, "expected key=value");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) fail(source_name, line_no, "empty key");

        if (key == "n") {
            cfg.n = static_cast<int>(parse_int(value, source_name, line_no));
        } else if (key == "nu") {
            cfg.nu = parse_double(value, source_name, line_no);
        } else if (key == "dt") {
            cfg.dt = parse_double(value, source_name, line_no);
        } else if (key == "t_end") {
            cfg.t_end = parse_double(value, source_name, line_no);
        } else if (key == "diag_stride") {
            cfg.diag_stride = static_cast<int>(parse_int(value, source_name, line_no));
        } else if (key == "k_list") {
            cfg.k_list = parse_int_list(value, source_name, line_no);
        } else if (key == "checkpoint_stride") {
            cfg.checkpoint_stride = parse_int(value, source_name, line_no);
        } else if (key == "dealias") {
            cfg.dealias = parse_bool(value, source_name, line_no);
        } else if (key == "nonlinear_form") {
            if (value == "convection") {
                cfg.nonlinear_form = NonlinearForm::convection;
            } else if (value == "divergence") {
                cfg.nonlinear_form = NonlinearForm::divergence;
            } else {
                fail(source_name, line_no, "nonlinear_form must be convection or divergence");
            }
        } else if (key == "viscous") {
            if (value == "explicit") {
                cfg.viscous_scheme = ViscousScheme::rk4_explicit;
            } else if (value == "integrating_factor") {
                cfg.viscous_scheme = ViscousScheme::integrating_factor;
            } else {
                fail(source_name, line_no, "viscous must be explicit or integrating_factor");
            }
        } else if (key == "nonlinear") {
            cfg.nonlinear_enabled = parse_bool(value, source_name, line_no);
        } else if (key == "beta_min") {
            cfg.beta_min = parse_double(value, source_name, line_no);
        } else if (key == "tstar_override") {
            if (value == "none") {
                cfg.tstar_override.reset();
            } else {
                cfg.tstar_override = parse_double(value, source_name, line_no);
            }
        } else if (key == "out_dir") {
            cfg.out_dir = std::string(value);
        } else if (key == "cfl_warn") {
            cfg.cfl_warn = parse_double(value, source_name, line_no);
        } else if (key == "viscous_warn") {
            cfg.viscous_warn = parse_double(value, source_name, line_no);
        } else {
            fail(source_name, line_no, "unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

SolverConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

std::string render_config(const SolverConfig& cfg) {
    std::ostringstream out;
    out << "n = " << cfg.n << "\n";
    out << "nu = " << format_double(cfg.nu) << "\n";
    out << "dt = " << format_double(cfg.dt) << "\n";
    out << "t_end = " << format_double(cfg.t_end) << "\n";
    out << "diag_stride = " << cfg.diag_stride << "\n";
    out << "k_list = ";
    for (std::size_t i = 0; i < cfg.k_list.size(); ++i) {
        if (i) out << ",";
        out << cfg.k_list[i];
    }
    out << "\n";
    out << "checkpoint_stride = " << cfg.checkpoint_stride << "\n";
    out << "dealias = " << (cfg.dealias ? "on" : "off") << "\n";
    out << "nonlinear_form = "
        << (cfg.nonlinear_form == NonlinearForm::convection ? "convection" : "divergence") << "\n";
    out << "viscous = "
        << (cfg.viscous_scheme == ViscousScheme::rk4_explicit ? "explicit" : "integrating_factor")
        << "\n";
    out << "nonlinear = " << (cfg.nonlinear_enabled ? "on" : "off") << "\n";
    out << "beta_min = " << format_double(cfg.beta_min) << "\n";
    out << "tstar_override = "
        << (cfg.tstar_override ? format_double(*cfg.tstar_override) : std::string("none")) << "\n";
    out << "out_dir = " << cfg.out_dir << "\n";
    out << "cfl_warn = " << format_double(cfg.cfl_warn) << "\n";
    out << "viscous_warn = " << format_double(cfg.viscous_warn) << "\n";
    return out.str();
}

}  // namespace tgvlab
