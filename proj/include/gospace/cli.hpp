#ifndef GOSPACE_CLI_HPP
#define GOSPACE_CLI_HPP

#include "gospace/family.hpp"
#include "gospace/invariants.hpp"
#include "gospace/space_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gospace {

// Exit codes of the command-line front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_refuted = 1;
inline constexpr int exit_input_error = 2;

/// A report document plus the exit code it implies.
struct CommandResult {
  Json report;
  int exit_code = exit_ok;
};

enum class GoMode { auto_mode, refute, sample, certify };
GoMode go_mode_from_string(const std::string &s);

// Report builders shared by the individual commands and `analyze`.
Json to_json(const GoVerdict &v);
Json to_json(const CrownGoReport &r);
Json to_json(const OmegaRealformReport &r);
Json to_json(const CrownNatredReport &r);
Json to_json(const CommutatorReport &r, const ReductiveSpace &space);
Json to_json(const FamilyReport &r);
Json to_json(const AuditReport &r);

CommandResult cmd_validate(const ReductiveSpace &space);
CommandResult cmd_check_go(const ReductiveSpace &space, GoMode mode, const GoOptions &options);
CommandResult cmd_check_natred(const ReductiveSpace &space);
CommandResult cmd_invariants(const ReductiveSpace &space, unsigned max_degree);
CommandResult cmd_commutators(const ReductiveSpace &space, unsigned max_degree);
CommandResult cmd_complexify(const ReductiveSpace &space);
CommandResult cmd_sample_omega(const ReductiveSpace &space, const GoOptions &options);
CommandResult cmd_family_verify(const Family &family, const FamilyOptions &options);
CommandResult cmd_analyze(const ReductiveSpace &space, const FamilyOptions &options);

/// Full front end: args excludes the program name. JSON goes to `out`,
/// a one-line human summary to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gospace

#endif
