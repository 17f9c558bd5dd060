#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "tensortopo/completion.hpp"
#include "tensortopo/moncat.hpp"
#include "tensortopo/sheaf.hpp"

namespace tensortopo {

struct CategoryDescription {
    std::string name;
    std::string kind;   // table, semilattice, quantale, topology, boolean, monoid
    nlohmann::ordered_json payload;
};

struct RunConfig {
    std::uint64_t halfbraiding_budget = 1'000'000;
    std::uint64_t completion_budget = 10'000;
    int jobs = 1;
    bool verbose = false;
    std::uint64_t seed = 0;
    std::string format = "json";
};

// Throws ParseError (with line and column) or SchemaError (with field path).
CategoryDescription parse_description(const std::string& path);
CategoryDescription parse_description_text(const std::string& text, const std::string& origin = "<input>");
std::string emit_description(const CategoryDescription& d);
CategoryDescription describe_table(const std::string& name, const MonoidalTable& m);

// Builder failures are reported as SchemaError naming the builder's complaint.
MonoidalTable build(const CategoryDescription& d);

// Functor file: {obj_map: {A: FA}, mor_map?: {f: Ff}, theta_unit?: m, theta?: [{a, b, morphism}]}.
// Missing coherence cells are filled with the unique available morphism.
MonoidalFunctorTable parse_functor(const std::string& path, std::shared_ptr<const MonoidalTable> source,
                                   std::shared_ptr<const MonoidalTable> target);

// Seed from the flag, then TENSORTOPO_SEED, then 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

nlohmann::ordered_json report_json(const std::string& name, const SheafReport& r, const MonoidalTable& m,
                                   const RunConfig& cfg);
std::string emit_report(const std::string& name, const SheafReport& r, const MonoidalTable& m, const RunConfig& cfg);
std::string zi_dot(const std::string& name, const ZILattice& zi, const SpectrumSpace* space, const CategoryTable& c);

// 0 when every non-skipped verdict passes, 1 otherwise.
int exit_code(const SheafReport& r);
// 1 for hypothesis failures, 2 for parse and internal errors.
int exit_code(ErrorKind k);

struct CommandArgs {
    std::string file;
    std::string at;
    std::string target;
    std::string functor;
    RunConfig config;
};

// Runs one subcommand; never throws. Returns the process exit code.
int run_command(const std::string& command, const CommandArgs& args, std::ostream& out, std::ostream& err);

}  // namespace tensortopo
