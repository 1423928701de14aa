#include "cli_runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "sldic/channel.hpp"
#include "sldic/errors.hpp"
#include "sldic/rates.hpp"
#include "sldic/scheme.hpp"

namespace sldic::cli {

namespace {

namespace fs = std::filesystem;

std::string decimal_string(const Rational& r) {
    if (r.den() == 1) return std::to_string(r.num());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", r.to_double());
    return buf;
}

int write_text_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return kExitUsage;
    }
    f << text;
    return f.good() ? kExitOk : kExitUsage;
}

int emit(const Options& opt, const std::string& text, std::ostream& out, std::ostream& err) {
    if (opt.out.empty()) {
        out << text;
        return kExitOk;
    }
    return write_text_file(opt.out, text, err);
}

void print_report_lines(const ChannelParams& p, const SchemeDescription& s,
                        const VerificationReport& r, std::ostream& out) {
    out << "m=" << p.m << " n=" << p.n << " C=" << p.C << " regime=" << to_string(s.regime)
        << " R_S=" << s.rate.value().to_string() << "\n";
    out << "decodable: rx1=" << (r.decodable_1 ? "yes" : "no")
        << " rx2=" << (r.decodable_2 ? "yes" : "no") << "\n";
    out << "secret: W1=" << (r.secret_1 ? "yes" : "no") << " W2=" << (r.secret_2 ? "yes" : "no")
        << " I(W1;y2)=" << r.mi_bits_1.to_string() << " I(W2;y1)=" << r.mi_bits_2.to_string()
        << "\n";
    out << "method=" << to_string(r.method) << " states=" << r.state_count << "\n";
}

int map_exception(const std::exception& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
    if (dynamic_cast<const UnsupportedCaseError*>(&e)) return kExitUnsupported;
    if (dynamic_cast<const ConsistencyError*>(&e)) return kExitVerificationFailed;
    return kExitUsage;
}

}  // namespace

int run_encode(const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const SchemeDescription s = build(ChannelParams{opt.m, opt.n, opt.C});
        return emit(opt, to_json_string(s) + "\n", out, err);
    } catch (const std::exception& e) {
        return map_exception(e, err);
    }
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const ChannelParams p{opt.m, opt.n, opt.C};
        const SchemeDescription s = build(p);
        const VerificationReport r = verify(s, opt.max_states);
        const bool budget_ok = validate_budget(s);
        print_report_lines(p, s, r, out);
        if (!opt.out.empty()) {
            const int rc = write_text_file(opt.out, to_json_string(s, r) + "\n", err);
            if (rc != kExitOk) return rc;
        }
        if (r.all_pass() && budget_ok) {
            out << "status: ok\n";
            return kExitOk;
        }
        out << "status: verification-failed"
            << " decodable=" << r.decodable_1 << r.decodable_2 << " secret=" << r.secret_1
            << r.secret_2 << " budget=" << budget_ok << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        return map_exception(e, err);
    }
}

int run_rate(const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const ChannelParams p{opt.m, opt.n, opt.C};
        const RateResult r = formula_rate(p);
        out << "m=" << p.m << " n=" << p.n << " C=" << p.C
            << " regime=" << to_string(classify_regime(p)) << " R_S=" << r.value().to_string()
            << " (" << decimal_string(r.value()) << ")\n";
        return kExitOk;
    } catch (const std::exception& e) {
        return map_exception(e, err);
    }
}

std::string sweep_csv(const Options& opt) {
    const auto points = sweep(opt.m, opt.n, opt.cmax, opt.max_states);
    std::ostringstream csv;
    csv << "C,rate_num,rate_den,rate,regime,verified\n";
    for (const RatePoint& pt : points) {
        const Rational v = pt.supported ? pt.rate.value() : Rational(0);
        csv << pt.C << "," << v.num() << "," << v.den() << "," << decimal_string(v) << ","
            << to_string(pt.regime) << "," << to_string(pt.verified) << "\n";
    }
    return csv.str();
}

int run_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        return emit(opt, sweep_csv(opt), out, err);
    } catch (const std::exception& e) {
        return map_exception(e, err);
    }
}

int run_demo(const Options& opt, std::ostream& out, std::ostream& err) {
    // Showcase configurations, one per constructive regime and C value.
    const std::vector<ChannelParams> configs = {
        {4, 2, 0}, {4, 2, 2}, {5, 4, 0}, {5, 4, 1}, {5, 4, 4}, {2, 4, 2},
    };
    bool all_ok = true;
    try {
        const fs::path dir = opt.out.empty() ? fs::path(".") : fs::path(opt.out);
        fs::create_directories(dir);
        for (const ChannelParams& p : configs) {
            const SchemeDescription s = build(p);
            const VerificationReport r = verify(s, opt.max_states);
            const bool ok = r.all_pass() && validate_budget(s);
            all_ok = all_ok && ok;
            out << "m=" << p.m << " n=" << p.n << " C=" << p.C
                << " R_S=" << s.rate.value().to_string() << " regime=" << to_string(s.regime)
                << " verified=" << (ok ? "yes" : "no") << " method=" << to_string(r.method)
                << "\n";
            std::ostringstream name;
            name << "scheme_m" << p.m << "_n" << p.n << "_C" << p.C << ".json";
            const int rc =
                write_text_file((dir / name.str()).string(), to_json_string(s, r) + "\n", err);
            if (rc != kExitOk) return rc;
        }
    } catch (const std::exception& e) {
        return map_exception(e, err);
    }
    if (!all_ok) {
        out << "status: verification-failed\n";
        return kExitVerificationFailed;
    }
    out << "status: ok\n";
    return kExitOk;
}

}  // namespace sldic::cli
