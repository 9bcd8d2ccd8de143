#include "tgvlab/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tgvlab/errors.hpp"

namespace tgvlab {

namespace {

// shortest representation that parses back to the identical double
std::string format_value(double v) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

double parse_value(std::string_view s, const std::string& path, int line) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError(path + ":" + std::to_string(line) + ": malformed value '" +
                          std::string(s) + "'");
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::string metadata_line(const SolverConfig& cfg) {
    std::ostringstream meta;
    meta << "# n=" << cfg.n << " nu=" << format_value(cfg.nu) << " dt=" << format_value(cfg.dt)
         << " t_end=" << format_value(cfg.t_end) << " diag_stride=" << cfg.diag_stride
         << " beta_min=" << format_value(cfg.beta_min_effective()) << " tstar_override="
         << (cfg.tstar_override ? format_value(*cfg.tstar_override) : std::string("none"));
    return meta.str();
}

}  // namespace

std::string csv_header(const SolverConfig& cfg) {
    std::ostringstream header;
    header << "t,energy,enstrophy";
    for (int order : required_orders(cfg.k_list)) header << ",logn_" << order;
    std::vector<int> ks = cfg.k_list;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) header << ",lnratio_" << k;
    return header.str();
}

DiagnosticsCsvWriter::DiagnosticsCsvWriter(const std::string& path, const SolverConfig& cfg,
                                           bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc),
      orders_(required_orders(cfg.k_list)),
      k_list_(cfg.k_list) {
    if (!out_) throw ConfigError("cannot open diagnostics CSV for writing: " + path);
    std::sort(k_list_.begin(), k_list_.end());
    k_list_.erase(std::unique(k_list_.begin(), k_list_.end()), k_list_.end());
    if (!append) {
        out_ << "# tgvlab diagnostics v1\n";
        out_ << metadata_line(cfg) << "\n";
        out_ << csv_header(cfg) << "\n";
        out_.flush();
    }
}

void DiagnosticsCsvWriter::write(const DiagnosticsRecord& record) {
    std::ostringstream row;
    row << format_value(record.t) << ',' << format_value(record.energy) << ','
        << format_value(record.enstrophy);
    for (int order : orders_) row << ',' << format_value(record.log_norms.at(order));
    for (int k : k_list_) row << ',' << format_value(record.log_ratios.at(k));
    out_ << row.str() << '\n';
    out_.flush();  // crash safety: a killed run leaves whole rows behind
}

DiagnosticsCsv read_diagnostics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open diagnostics CSV: " + path);

    DiagnosticsCsv csv;
    std::string line;
    int line_no = 0;
    std::vector<std::string> columns;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            // harvest key=value metadata tokens
            std::istringstream meta(line.substr(1));
            std::string token;
            while (meta >> token) {
                const std::size_t eq = token.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = token.substr(0, eq);
                const std::string value = token.substr(eq + 1);
                if (value == "none") continue;
                if (key == "n") csv.n = static_cast<int>(parse_value(value, path, line_no));
                if (key == "nu") csv.nu = parse_value(value, path, line_no);
                if (key == "dt") csv.dt = parse_value(value, path, line_no);
                if (key == "diag_stride")
                    csv.diag_stride = static_cast<int>(parse_value(value, path, line_no));
                if (key == "beta_min") csv.beta_min = parse_value(value, path, line_no);
                if (key == "tstar_override") csv.tstar_override = parse_value(value, path, line_no);
            }
            continue;
        }
        if (columns.empty()) {
            for (std::string_view name : split(line, ',')) {
                columns.emplace_back(name);
            }
            if (columns.size() < 3 || columns[0] != "t" || columns[1] != "energy" ||
                columns[2] != "enstrophy") {
                throw ConfigError(path + ":" + std::to_string(line_no) +
                                  ": header must start with t,energy,enstrophy");
            }
            for (std::size_t c = 3; c < columns.size(); ++c) {
                const std::string& name = columns[c];
                if (name.rfind("logn_", 0) == 0) {
                    csv.orders.push_back(static_cast<int>(parse_value(name.substr(5), path, line_no)));
                } else if (name.rfind("lnratio_", 0) == 0) {
                    csv.k_list.push_back(
                        static_cast<int>(parse_value(name.substr(8), path, line_no)));
                } else {
                    throw ConfigError(path + ":" + std::to_string(line_no) + ": unknown column '" +
                                      name + "'");
                }
            }
            if (csv.k_list.empty()) {
                throw ConfigError(path + ": k_list empty (no lnratio columns)");
            }
            continue;
        }

        const auto fields = split(line, ',');
        if (fields.size() != columns.size()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(columns.size()) + " fields, got " +
                              std::to_string(fields.size()));
        }
        DiagnosticsRecord record;
        record.t = parse_value(fields[0], path, line_no);
        record.energy = parse_value(fields[1], path, line_no);
        record.enstrophy = parse_value(fields[2], path, line_no);
        std::size_t c = 3;
        for (int order : csv.orders) record.log_norms[order] = parse_value(fields[c++], path, line_no);
        for (int k : csv.k_list) record.log_ratios[k] = parse_value(fields[c++], path, line_no);
        csv.records.push_back(std::move(record));
    }
    if (columns.empty()) throw ConfigError(path + ": no header row found");
    return csv;
}

}  // namespace tgvlab
