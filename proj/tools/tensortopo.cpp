#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tensortopo/cli.hpp"

int main(int argc, char** argv) {
    using namespace tensortopo;
    CLI::App app{"Central idempotents, spectra, restriction categories and stalks of finite strict monoidal categories"};
    app.require_subcommand(1);
    app.fallthrough();
    CommandArgs args;
    std::optional<std::uint64_t> seed;
    app.add_option("--budget-halfbraiding", args.config.halfbraiding_budget, "half-braiding search bound");
    app.add_option("--budget-completion", args.config.completion_budget, "morphism bound for D[C]");
    app.add_option("--jobs", args.config.jobs, "worker threads");
    app.add_option("--seed", seed, "seed for spot checks (falls back to TENSORTOPO_SEED)");
    app.add_option("--format", args.config.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    app.add_flag("--verbose", args.config.verbose, "include restriction-category tables");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"validate", "check the monoidal laws"},
        {"zi", "central idempotents and their semilattice"},
        {"spectrum", "prime spectrum of ZI"},
        {"restrict", "restriction category C|u"},
        {"stalks", "stalks at every point"},
        {"sheaf-check", "equalizer and zero-section checks"},
        {"represent", "full sheaf representation report"},
        {"complete", "free completion D[C] and its universal property"},
        {"embed-product", "embedding into the product of stalks"}};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", args.file, "category description (JSON)")->required()->check(CLI::ExistingFile);
        if (std::string(name) == "restrict") sub->add_option("--at", args.at, "central idempotent")->required();
        if (std::string(name) == "complete") {
            sub->add_option("--target", args.target, "target category description");
            sub->add_option("--functor", args.functor, "functor description");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    try {
        args.config.seed = resolve_seed(seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return run_command(command, args, std::cout, std::cerr);
}
