// Batch front end: property verification, kernel tables, transforms of
// signal files, and the Bargmann pipeline.  Exit codes: 0 success,
// 1 property failure, 2 parse/config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfht/bargmann.hpp"
#include "qfht/errors.hpp"
#include "qfht/hilbert.hpp"
#include "qfht/io.hpp"
#include "qfht/kernel.hpp"
#include "qfht/transform.hpp"
#include "qfht/verify.hpp"

namespace {

qfht::Quaternion parse_theta(const std::string& spec) {
    double c[4];
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t used = 0;
        c[i] = std::stod(spec.substr(pos), &used);
        pos += used;
        if (i < 3) {
            if (pos >= spec.size() || spec[pos] != ',')
                throw qfht::DomainError("--theta expects w,x,y,z");
            ++pos;
        }
    }
    return {c[0], c[1], c[2], c[3]};
}

qfht::ImaginaryUnit parse_unit(const std::string& name) {
    if (name == "i") return qfht::ImaginaryUnit::i();
    if (name == "j") return qfht::ImaginaryUnit::j();
    if (name == "k") return qfht::ImaginaryUnit::k();
    throw qfht::DomainError("--unit expects i, j or k");
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("QFHT_SEED")) return std::strtoull(s, nullptr, 10);
    return 42;
}

int run_verify(int rule_size, const std::string& output) {
    qfht::VerifyConfig cfg;
    cfg.seed = env_seed();
    cfg.rule_size = rule_size;
    const std::vector<qfht::PropertyResult> results = qfht::run_acceptance(cfg);

    nlohmann::ordered_json report;
    report["seed"] = cfg.seed;
    report["rule_size"] = cfg.rule_size;
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json p;
        p["property"] = r.property;
        p["max_deviation"] = r.max_deviation;
        if (r.informational)
            p["tolerance"] = nullptr;
        else
            p["tolerance"] = r.tolerance;
        p["pass"] = r.pass;
        props.push_back(p);
    }
    report["properties"] = props;
    report["pass"] = qfht::all_pass(results);

    std::cout << report.dump(2) << "\n";
    if (!output.empty()) {
        std::ofstream out(output);
        out << report.dump(2) << "\n";
    }
    return qfht::all_pass(results) ? 0 : 1;
}

int run_kernel_table(const std::string& theta_spec, double alpha, const std::string& output,
                     double xmin, double xmax, int xcount, double ymin, double ymax,
                     int ycount) {
    const qfht::Quaternion theta = parse_theta(theta_spec);
    const qfht::KernelConfig cfg(alpha);
    std::ofstream out(output);
    if (!out) throw qfht::DomainError("kernel-table: cannot open " + output);
    out << "# x, y, Re, I-part, unit-x, unit-y, unit-z\n";
    for (int a = 0; a < xcount; ++a)
        for (int b = 0; b < ycount; ++b) {
            const double x = xcount == 1 ? xmin : xmin + (xmax - xmin) * a / (xcount - 1.0);
            const double y = ycount == 1 ? ymin : ymin + (ymax - ymin) * b / (ycount - 1.0);
            const qfht::Quaternion v = qfht::k_kernel(theta, x, y, cfg);
            const qfht::SliceForm s = qfht::slice_decompose(v);
            const double ipart = s.modulus * std::sin(s.angle);
            out << qfht::format_g17(x) << ", " << qfht::format_g17(y) << ", "
                << qfht::format_g17(v.w) << ", " << qfht::format_g17(ipart) << ", "
                << qfht::format_g17(s.unit.u.x) << ", " << qfht::format_g17(s.unit.u.y) << ", "
                << qfht::format_g17(s.unit.u.z) << "\n";
        }
    return 0;
}

int run_transform(const std::string& theta_spec, double alpha, const std::string& input,
                  const std::string& path, const std::string& output, int cutoff) {
    const qfht::Quaternion theta = parse_theta(theta_spec);
    const qfht::RadialSignal f = qfht::read_signal_file(input);
    if (f.rule->alpha != alpha)
        throw qfht::ConfigMismatchError("transform: --alpha differs from the signal file");
    if (qfht::norm(theta) > 1.0 + 1e-12 && path != "spectral")
        throw qfht::DomainError("transform: |theta| > 1 is only usable on the spectral path");

    qfht::RadialSignal out = qfht::zero_signal(f.rule);
    if (theta == qfht::Quaternion::one()) {
        out = f; // exact identity on both paths
    } else if (path == "spectral") {
        const int n = std::min(cutoff, f.rule->count() - 1);
        out = qfht::synthesize(qfht::frht_spectral(qfht::analyze(f, n), theta), f.rule);
    } else if (path == "quadrature") {
        const qfht::FrhtOperator op(theta, f.rule);
        out = qfht::frht_quadrature(f, op);
    } else {
        throw qfht::DomainError("transform: --path expects spectral or quadrature");
    }
    qfht::write_signal_file(output, out);
    return 0;
}

int run_bargmann(bool inverse, const std::string& input, const std::string& coeffs,
                 double alpha, int rule_size, int cutoff, const std::string& unit_name,
                 int disc_radial, int disc_angular, const std::string& out_path) {
    if (!inverse) {
        const qfht::RadialSignal f = qfht::read_signal_file(input);
        if (f.rule->alpha != alpha)
            throw qfht::ConfigMismatchError("bargmann: --alpha differs from the signal file");
        const int n = std::min(cutoff, f.rule->count() - 1);
        const qfht::SliceRegularSeries series = qfht::bargmann_forward(f, n);
        qfht::write_coeffs_file(out_path, series.coeffs);
        return 0;
    }
    const std::vector<qfht::Quaternion> c = qfht::read_coeffs_file(coeffs);
    qfht::SliceRegularSeries series;
    series.coeffs = c;
    const qfht::RulePtr rule = qfht::build_rule(alpha, rule_size);
    const qfht::DiscRulePtr disc = qfht::build_disc_rule(alpha, disc_radial, disc_angular);
    const qfht::RadialSignal f =
        qfht::bargmann_inverse(series, rule, *disc, parse_unit(unit_name));
    qfht::write_signal_file(out_path, f);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic fractional Hankel transform toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the property suite, print a JSON report");
    int v_m = 128;
    std::string v_out;
    verify->add_option("--m", v_m, "Gauss-Laguerre rule size")->check(CLI::Range(1, 512));
    verify->add_option("--output", v_out, "also write the JSON report to a file");

    // kernel-table
    auto* ktab = app.add_subcommand("kernel-table", "emit the weighted kernel on a grid as CSV");
    std::string kt_theta = "0,0,0,0", kt_out;
    double kt_alpha = 1.0;
    double kt_xmin = 0.5, kt_xmax = 10.0, kt_ymin = 0.5, kt_ymax = 10.0;
    int kt_xcount = 8, kt_ycount = 8;
    ktab->add_option("--theta", kt_theta, "quaternion w,x,y,z");
    ktab->add_option("--alpha", kt_alpha, "weight exponent")->required();
    ktab->add_option("--output", kt_out, "output CSV path")->required();
    ktab->add_option("--xmin", kt_xmin);
    ktab->add_option("--xmax", kt_xmax);
    ktab->add_option("--xcount", kt_xcount)->check(CLI::PositiveNumber);
    ktab->add_option("--ymin", kt_ymin);
    ktab->add_option("--ymax", kt_ymax);
    ktab->add_option("--ycount", kt_ycount)->check(CLI::PositiveNumber);

    // transform
    auto* tr = app.add_subcommand("transform", "apply the fractional transform to a signal file");
    std::string tr_theta, tr_in, tr_path = "spectral", tr_out;
    double tr_alpha = 1.0;
    int tr_n = 40;
    tr->add_option("--theta", tr_theta, "quaternion w,x,y,z")->required();
    tr->add_option("--alpha", tr_alpha, "weight exponent")->required();
    tr->add_option("--input", tr_in, "input signal CSV")->required();
    tr->add_option("--path", tr_path, "spectral | quadrature");
    tr->add_option("--output", tr_out, "output signal CSV")->required();
    tr->add_option("--n", tr_n, "spectral coefficient cutoff");

    // bargmann
    auto* bg = app.add_subcommand("bargmann", "forward/inverse second Bargmann transform");
    bool bg_inverse = false;
    std::string bg_in, bg_coeffs, bg_unit = "i", bg_out;
    double bg_alpha = 1.0;
    int bg_m = 128, bg_n = 40, bg_radial = 64, bg_angular = 256;
    bg->add_flag("--inverse", bg_inverse, "run the inverse transform");
    bg->add_option("--input", bg_in, "input signal CSV (forward)");
    bg->add_option("--coeffs", bg_coeffs, "coefficient JSON (inverse)");
    bg->add_option("--alpha", bg_alpha, "weight exponent")->required();
    bg->add_option("--m", bg_m, "rule size for the inverse output")->check(CLI::Range(1, 512));
    bg->add_option("--n", bg_n, "forward coefficient cutoff");
    bg->add_option("--unit", bg_unit, "slice unit for the inverse: i | j | k");
    bg->add_option("--disc-radial", bg_radial, "disc rule radial nodes");
    bg->add_option("--disc-angular", bg_angular, "disc rule angular count");
    bg->add_option("--out", bg_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(v_m, v_out);
        if (ktab->parsed())
            return run_kernel_table(kt_theta, kt_alpha, kt_out, kt_xmin, kt_xmax, kt_xcount,
                                    kt_ymin, kt_ymax, kt_ycount);
        if (tr->parsed()) return run_transform(tr_theta, tr_alpha, tr_in, tr_path, tr_out, tr_n);
        if (bg->parsed()) {
            if (!bg_inverse && bg_in.empty())
                throw qfht::DomainError("bargmann: --input is required for the forward transform");
            if (bg_inverse && bg_coeffs.empty())
                throw qfht::DomainError("bargmann: --coeffs is required for the inverse");
            return run_bargmann(bg_inverse, bg_in, bg_coeffs, bg_alpha, bg_m, bg_n, bg_unit,
                                bg_radial, bg_angular, bg_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
