#include "ilkit/search.hpp"

#include <chrono>

#include "ilkit/enumerate.hpp"
#include "ilkit/semantics.hpp"

namespace ilkit {

namespace {

class Budget {
public:
  explicit Budget(const SearchBounds& bounds)
      : bounds_(bounds), start_(std::chrono::steady_clock::now()) {}

  // False once the frame or time budget is gone.
  bool admit() {
    if (frames_ >= bounds_.max_frames_examined) {
      why_ = "frame budget exhausted after " + std::to_string(frames_) + " frames";
      return false;
    }
    ++frames_;
    if ((frames_ & 0xff) == 0) {
      const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start_);
      if (spent.count() > bounds_.time_budget_ms) {
        why_ = "time budget exceeded after " + std::to_string(frames_) + " frames";
        return false;
      }
    }
    return true;
  }

  std::int64_t frames() const { return frames_; }
  bool exceeded() const { return !why_.empty(); }
  const std::string& why() const { return why_; }

private:
  const SearchBounds& bounds_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t frames_ = 0;
  std::string why_;
};

SearchOutcome finish(const Budget& budget) {
  SearchOutcome out;
  out.frames_examined = budget.frames();
  if (budget.exceeded()) {
    out.kind = OutcomeKind::BudgetExceeded;
    out.detail = budget.why();
  } else {
    out.kind = OutcomeKind::ExhaustedWithinBounds;
    out.detail = "examined " + std::to_string(budget.frames()) + " frames";
  }
  return out;
}

}  // namespace

SearchOutcome find_countermodel(const Fml& f, const std::vector<ConditionId>& logic,
                                const SearchBounds& bounds) {
  if (!is_ground(f)) {
    throw FormulaError("countermodel search needs a ground formula; "
                       "write its letters as atoms");
  }
  for (const ConditionId& c : logic) {
    if (!c.is_general()) {
      throw ModelError("countermodel search runs on generalised frames; " +
                       c.token() + " is an ordinary-frame condition");
    }
  }
  const Limits limits{bounds.max_valuations};

  Budget budget(bounds);
  SearchOutcome found;
  enumerate_general_frames(
      bounds.max_worlds, bounds.qt_variant, [&](const GeneralModel& frame) {
        if (!budget.admit()) return false;
        for (const ConditionId& c : logic) {
          if (!check_general(frame, c, limits).holds) return true;
        }
        const FrameValidity fv = frame_valid_scheme(frame, f, limits);
        if (fv.valid) return true;
        found.kind = OutcomeKind::Witness;
        found.model = frame;
        for (const auto& [letter, mask] : fv.witness_valuation) {
          found.model->valuation[letter] = mask;
        }
        found.world = fv.witness_world;
        found.frames_examined = budget.frames();
        found.detail = "countermodel after " + std::to_string(budget.frames()) + " frames";
        return false;
      });
  if (found.kind == OutcomeKind::Witness) return found;
  return finish(budget);
}

SearchOutcome find_separating_frame(const ConditionId& holds,
                                    const ConditionId& fails,
                                    const SearchBounds& bounds) {
  if (!holds.is_general() || !fails.is_general()) {
    throw ModelError("separation search runs on generalised frames");
  }
  const Limits limits{bounds.max_valuations};

  Budget budget(bounds);
  SearchOutcome found;
  enumerate_general_frames(
      bounds.max_worlds, bounds.qt_variant, [&](const GeneralModel& frame) {
        if (!budget.admit()) return false;
        if (!check_general(frame, holds, limits).holds) return true;
        const ConditionVerdict fails_verdict = check_general(frame, fails, limits);
        if (fails_verdict.holds) return true;
        if (!validate_general(frame).ok ||
            !check_general(frame, holds, limits).holds ||
            check_general(frame, fails, limits).holds) {
          throw ModelError("separating frame failed its re-check");
        }
        found.kind = OutcomeKind::Witness;
        found.model = frame;
        found.frames_examined = budget.frames();
        found.detail = holds.token() + " holds, " + fails.token() + " fails; " +
                       describe(fails_verdict);
        return false;
      });
  if (found.kind == OutcomeKind::Witness) return found;
  return finish(budget);
}

}  // namespace ilkit
