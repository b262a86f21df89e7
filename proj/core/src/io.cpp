#include "qfht/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qfht/errors.hpp"

namespace qfht {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_signal(std::ostream& out, const RadialSignal& f) {
    if (!f.rule) throw RuleMismatchError("write_signal: signal has no rule");
    out << "# qfht-signal alpha=" << format_g17(f.rule->alpha) << " m=" << f.rule->count()
        << "\n";
    for (int i = 0; i < f.rule->count(); ++i) {
        const Quaternion& q = f.values[static_cast<size_t>(i)];
        out << format_g17(f.rule->nodes[static_cast<size_t>(i)]) << ", "
            << format_g17(f.rule->weights[static_cast<size_t>(i)]) << ", " << format_g17(q.w)
            << ", " << format_g17(q.x) << ", " << format_g17(q.y) << ", " << format_g17(q.z)
            << "\n";
    }
}

void write_signal_file(const std::string& path, const RadialSignal& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_signal_file: cannot open " + path);
    write_signal(out, f);
}

RadialSignal read_signal(std::istream& in) {
    double alpha = 0.0;
    bool have_alpha = false;
    auto rule = std::make_shared<GaussLaguerreRule>();
    std::vector<Quaternion> values;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("alpha=");
            if (pos != std::string::npos) {
                alpha = std::strtod(line.c_str() + pos + 6, nullptr);
                have_alpha = true;
            }
            continue;
        }
        std::istringstream row(line);
        double col[6];
        char sep;
        for (int c = 0; c < 6; ++c) {
            if (!(row >> col[c]))
                throw std::runtime_error("read_signal: malformed row: " + line);
            if (c < 5) row >> sep;
        }
        rule->nodes.push_back(col[0]);
        rule->weights.push_back(col[1]);
        values.push_back({col[2], col[3], col[4], col[5]});
    }
    if (!have_alpha)
        throw std::runtime_error("read_signal: missing '# qfht-signal alpha=...' header");
    if (rule->nodes.empty()) throw std::runtime_error("read_signal: no data rows");
    rule->alpha = alpha;
    return RadialSignal{std::move(rule), std::move(values)};
}

RadialSignal read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_signal_file: cannot open " + path);
    return read_signal(in);
}

void write_coeffs_file(const std::string& path, const std::vector<Quaternion>& coeffs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Quaternion& q : coeffs) arr.push_back({q.w, q.x, q.y, q.z});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_coeffs_file: cannot open " + path);
    out << arr.dump(2) << "\n";
}

std::vector<Quaternion> read_coeffs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_coeffs_file: cannot open " + path);
    nlohmann::json arr = nlohmann::json::parse(in);
    if (!arr.is_array()) throw std::runtime_error("read_coeffs_file: expected a JSON array");
    std::vector<Quaternion> coeffs;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 4)
            throw std::runtime_error("read_coeffs_file: expected [w,x,y,z] quadruples");
        coeffs.push_back({item[0].get<double>(), item[1].get<double>(), item[2].get<double>(),
                          item[3].get<double>()});
    }
    return coeffs;
}

} // namespace qfht
