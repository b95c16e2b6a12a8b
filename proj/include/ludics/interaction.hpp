#pragma once

#include "ludics/design.hpp"
#include "ludics/path.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ludics {

/// A closed cut-net split into the traced side (whose base holds every cut
/// locus) and the counter side on the dual base.
struct CutNet {
    Net traced;
    Net counter;
    std::vector<Locus> cuts;
};

CutNet validate_cutnet(const Net& traced, const Net& counter);
CutNet validate_cutnet(const Design& traced, const Net& counter);

enum class Outcome { Converges, Diverges };

struct DivergenceReason {
    enum class Kind { RamificationMissing, StepBudgetExhausted } kind;
    /// The positive action left unanswered, for RamificationMissing.
    std::optional<Action> action;

    std::string to_string() const;
};

struct NormalizationResult {
    Outcome outcome = Outcome::Diverges;
    Sequence trace_on_d;
    Sequence trace_on_r;
    std::size_t steps = 0;
    std::optional<DivergenceReason> divergence;

    bool converges() const { return outcome == Outcome::Converges; }
};

/// Default budget: one more than the number of actions of the cut-net.
std::size_t default_step_budget(const CutNet& c);

NormalizationResult normalize(const CutNet& c, std::optional<std::size_t> step_budget = std::nullopt);

bool orthogonal(const Net& traced, const Net& counter);
bool orthogonal(const Design& traced, const Net& counter);

/// Every justified negative action is reached by the dual chain from it.
bool restrictive_negative_jump_ok(const Sequence& p, const NetBase& base);

} // namespace ludics
