#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "hopfkit/scenario.hpp"

namespace {

struct Options {
    std::string file;
    hopfkit::Overrides overrides;
    std::string format = "text";
    std::size_t samples = 20;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "scenario file (.scn)")->required();
    cmd->add_option("--degree-bound", [&opt](const CLI::results_t& v) {
        opt.overrides.degree_bound = std::stoi(v[0]);
        return true;
    }, "override the verification degree bound");
    cmd->add_option("--conductor", [&opt](const CLI::results_t& v) {
        opt.overrides.conductor = std::stoi(v[0]);
        return true;
    }, "override the cyclotomic conductor N of Q(zeta_N)");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_flag("--keep-going", opt.overrides.keep_going,
                  "run remaining analyses after a failure");
}

int emit(const hopfkit::Report& report, const std::string& format) {
    std::cout << (format == "machine" ? hopfkit::format_report_machine(report)
                                      : hopfkit::format_report_text(report));
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification kernel for finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* verify = app.add_subcommand("verify", "run a scenario's analyses in order");
    add_common(verify, opt);
    verify->add_option("--samples", [&opt](const CLI::results_t& v) {
        opt.overrides.samples = std::stoull(v[0]);
        return true;
    }, "override sample counts of scan analyses");
    verify->add_option("--seed", [&opt](const CLI::results_t& v) {
        opt.overrides.seed = std::stoull(v[0]);
        return true;
    }, "override the sampling seed");

    CLI::App* scan = app.add_subcommand("scan", "run a seeded coideal scan against a scenario");
    add_common(scan, opt);
    scan->add_option("--samples", opt.samples, "number of sampled characters");
    scan->add_option("--seed", opt.seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify))
            return emit(hopfkit::run_scenario_file(opt.file, opt.overrides), opt.format);
        return emit(hopfkit::run_scan_file(opt.file, opt.samples, opt.seed, opt.overrides),
                    opt.format);
    } catch (const hopfkit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hopfkit::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hopfkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
