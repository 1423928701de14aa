#include <CLI11.hpp>
#include <iostream>

#include "cli_runner.hpp"

int main(int argc, char** argv) {
    using namespace sldic::cli;

    CLI::App app{"Secure transmission schemes for the 2-user symmetric linear deterministic "
                 "interference channel with transmitter cooperation"};
    app.require_subcommand(1);

    Options opt;

    const auto add_channel_flags = [&](CLI::App* cmd) {
        cmd->add_option("--m", opt.m, "direct-link level count")
            ->required()
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--n", opt.n, "cross-link level count")
            ->required()
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--c", opt.C, "cooperation capacity (bits/use/direction)")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* encode = app.add_subcommand("encode", "build a scheme and dump its description");
    add_channel_flags(encode);
    encode->add_option("--out", opt.out, "output file (default stdout)");
    encode->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"structured-text"}));

    CLI::App* verify = app.add_subcommand("verify", "build a scheme and verify it exactly");
    add_channel_flags(verify);
    verify->add_option("--out", opt.out, "also dump scheme and report to this file");
    verify->add_option("--max-states", opt.max_states,
                       "enumeration bound on 2^(source bits); above it only the rank method runs");

    CLI::App* rate = app.add_subcommand("rate", "closed-form achievable secrecy rate");
    add_channel_flags(rate);

    CLI::App* sweep = app.add_subcommand("sweep", "CSV of achievable rates for C = 0..cmax");
    sweep->add_option("--m", opt.m, "direct-link level count")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--n", opt.n, "cross-link level count")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--cmax", opt.cmax, "largest cooperation capacity")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--out", opt.out, "output CSV file (default stdout)");
    sweep->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv"}));
    sweep->add_option("--max-states", opt.max_states, "per-point enumeration bound");

    CLI::App* demo = app.add_subcommand(
        "demo", "build, verify and dump the showcase configurations");
    demo->add_option("--out", opt.out, "directory for scheme dumps (default .)");
    demo->add_option("--max-states", opt.max_states, "enumeration bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (encode->parsed()) return run_encode(opt, std::cout, std::cerr);
    if (verify->parsed()) return run_verify(opt, std::cout, std::cerr);
    if (rate->parsed()) return run_rate(opt, std::cout, std::cerr);
    if (sweep->parsed()) return run_sweep(opt, std::cout, std::cerr);
    if (demo->parsed()) return run_demo(opt, std::cout, std::cerr);
    return kExitUsage;
}
