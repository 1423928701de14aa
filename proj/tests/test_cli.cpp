#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "sldic/scheme.hpp"

using namespace sldic;
using namespace sldic::cli;

namespace fs = std::filesystem;

TEST_CASE("verify command exit codes") {
    std::ostringstream out, err;
    Options opt;
    opt.m = 4;
    opt.n = 2;
    opt.C = 2;
    CHECK(run_verify(opt, out, err) == kExitOk);
    CHECK(out.str().find("status: ok") != std::string::npos);

    SUBCASE("unity is trivially secret") {
        std::ostringstream o2, e2;
        Options u;
        u.m = 3;
        u.n = 3;
        u.C = 1;
        CHECK(run_verify(u, o2, e2) == kExitOk);
        CHECK(o2.str().find("R_S=0") != std::string::npos);
    }

    SUBCASE("deferred regimes exit with the unsupported code") {
        std::ostringstream o2, e2;
        Options h;
        h.m = 3;
        h.n = 5;
        h.C = 1;
        CHECK(run_verify(h, o2, e2) == kExitUnsupported);
        CHECK(e2.str().find("deferred") != std::string::npos);
    }

    SUBCASE("degenerate parameters are a usage error") {
        std::ostringstream o2, e2;
        Options d;
        CHECK(run_verify(d, o2, e2) == kExitUsage);
    }
}

TEST_CASE("sweep CSV format and determinism") {
    Options opt;
    opt.m = 4;
    opt.n = 2;
    opt.cmax = 2;
    const std::string csv = sweep_csv(opt);
    CHECK(csv ==
          "C,rate_num,rate_den,rate,regime,verified\n"
          "0,2,1,2,weak,yes\n"
          "1,3,1,3,weak,yes\n"
          "2,4,1,4,weak,yes\n");
    // byte-identical across runs
    CHECK(sweep_csv(opt) == csv);

    SUBCASE("fractional rates keep the exact fields alongside the decimal") {
        Options vh;
        vh.m = 2;
        vh.n = 4;
        vh.cmax = 4;
        const std::string rows = sweep_csv(vh);
        CHECK(rows.find("2,5,2,2.5,very_high,yes") != std::string::npos);
    }

    SUBCASE("written file matches the stream output") {
        const fs::path path = fs::temp_directory_path() / "sldic_test_sweep.csv";
        Options f = opt;
        f.out = path.string();
        std::ostringstream out, err;
        REQUIRE(run_sweep(f, out, err) == kExitOk);
        std::ifstream in(path, std::ios::binary);
        std::stringstream content;
        content << in.rdbuf();
        CHECK(content.str() == csv);
        fs::remove(path);
    }

    SUBCASE("unwritable path is an I/O error") {
        Options bad = opt;
        bad.out = "/nonexistent-dir/sweep.csv";
        std::ostringstream out, err;
        CHECK(run_sweep(bad, out, err) == kExitUsage);
    }
}

TEST_CASE("rate command") {
    std::ostringstream out, err;
    Options opt;
    opt.m = 2;
    opt.n = 4;
    opt.C = 2;
    CHECK(run_rate(opt, out, err) == kExitOk);
    CHECK(out.str().find("R_S=5/2 (2.5)") != std::string::npos);

    std::ostringstream o2, e2;
    Options h;
    h.m = 3;
    h.n = 5;
    h.C = 0;
    CHECK(run_rate(h, o2, e2) == kExitUnsupported);
}

TEST_CASE("encode command emits a parsable scheme dump") {
    std::ostringstream out, err;
    Options opt;
    opt.m = 5;
    opt.n = 4;
    opt.C = 1;
    REQUIRE(run_encode(opt, out, err) == kExitOk);
    const SchemeDescription s = scheme_from_json_string(out.str());
    CHECK(s.params.m == 5);
    CHECK(s.rate == RateResult{3, 1});
    CHECK(s == build(ChannelParams{5, 4, 1}));
}

TEST_CASE("demo prints the showcase table and writes dumps") {
    const fs::path dir = fs::temp_directory_path() / "sldic_test_demo";
    fs::remove_all(dir);
    Options opt;
    opt.out = dir.string();
    std::ostringstream out, err;
    REQUIRE(run_demo(opt, out, err) == kExitOk);
    const std::string text = out.str();
    CHECK(text.find("m=4 n=2 C=0 R_S=2") != std::string::npos);
    CHECK(text.find("m=4 n=2 C=2 R_S=4") != std::string::npos);
    CHECK(text.find("m=5 n=4 C=0 R_S=2") != std::string::npos);
    CHECK(text.find("m=5 n=4 C=1 R_S=3") != std::string::npos);
    CHECK(text.find("m=5 n=4 C=4 R_S=5") != std::string::npos);
    CHECK(text.find("m=2 n=4 C=2 R_S=5/2") != std::string::npos);
    CHECK(text.find("status: ok") != std::string::npos);
    CHECK(fs::exists(dir / "scheme_m2_n4_C2.json"));
    CHECK(fs::exists(dir / "scheme_m4_n2_C0.json"));
    fs::remove_all(dir);
}
