#include "ilkit/schemes.hpp"

namespace ilkit {

namespace {

Fml A() { return mk_meta("A"); }
Fml B() { return mk_meta("B"); }
Fml C() { return mk_meta("C"); }
Fml D(int i) { return mk_meta("D" + std::to_string(i)); }

// U_1 = <>~(D1 |> ~C), U_k = <>((D_{k-1} |> D_k) /\ U_{k-1}) for k >= 2.
Fml u_scheme(int n) {
  Fml u = mk_dia(mk_neg(mk_rhd(D(1), mk_neg(C()))));
  for (int k = 2; k <= n; ++k) u = mk_dia(mk_and(mk_rhd(D(k - 1), D(k)), u));
  return u;
}

// Rn:0 is R itself; Rn:k strengthens the displaced antecedent with U_k.
Fml r_scheme(int n) {
  const Fml body = mk_and(B(), mk_box(C()));
  if (n == 0) {
    return mk_impl(mk_rhd(A(), B()),
                   mk_rhd(mk_neg(mk_rhd(A(), mk_neg(C()))), body));
  }
  return mk_impl(mk_rhd(A(), B()),
                 mk_rhd(mk_and(u_scheme(n), mk_rhd(D(n), A())), body));
}

constexpr int kMaxIndex = 64;

std::optional<int> parse_index(const std::string& id, size_t from, int least) {
  if (from >= id.size() || id.size() - from > 2) return std::nullopt;
  int value = 0;
  for (size_t i = from; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return std::nullopt;
    value = value * 10 + (id[i] - '0');
  }
  if (value < least || value > kMaxIndex) return std::nullopt;
  return value;
}

}  // namespace

const std::vector<NamedScheme>& axiom_schemes() {
  static const std::vector<NamedScheme> schemes = {
      {"L1", mk_impl(mk_box(mk_impl(A(), B())), mk_impl(mk_box(A()), mk_box(B())))},
      {"L2", mk_impl(mk_box(A()), mk_box(mk_box(A())))},
      {"L3", mk_impl(mk_box(mk_impl(mk_box(A()), A())), mk_box(A()))},
      {"J1", mk_impl(mk_box(mk_impl(A(), B())), mk_rhd(A(), B()))},
      {"J2", mk_impl(mk_and(mk_rhd(A(), B()), mk_rhd(B(), C())), mk_rhd(A(), C()))},
      {"J3", mk_impl(mk_and(mk_rhd(A(), C()), mk_rhd(B(), C())),
                     mk_rhd(mk_or(A(), B()), C()))},
      {"J4", mk_impl(mk_rhd(A(), B()), mk_impl(mk_dia(A()), mk_dia(B())))},
      {"J5", mk_rhd(mk_dia(A()), A())},
  };
  return schemes;
}

const std::vector<NamedScheme>& scheme_catalog() {
  static const std::vector<NamedScheme> schemes = {
      {"M", mk_impl(mk_rhd(A(), B()),
                    mk_rhd(mk_and(A(), mk_box(C())), mk_and(B(), mk_box(C()))))},
      {"P", mk_impl(mk_rhd(A(), B()), mk_box(mk_rhd(A(), B())))},
      {"W", mk_impl(mk_rhd(A(), B()),
                    mk_rhd(A(), mk_and(B(), mk_box(mk_neg(A())))))},
      {"KW1", mk_impl(mk_rhd(A(), mk_dia(mk_top())), mk_rhd(mk_top(), mk_neg(A())))},
      {"KW1_0", mk_impl(mk_rhd(mk_and(A(), B()), mk_dia(A())),
                        mk_rhd(A(), mk_and(A(), mk_neg(B()))))},
      {"F", mk_impl(mk_rhd(A(), mk_dia(A())), mk_box(mk_neg(A())))},
      {"M0", mk_impl(mk_rhd(A(), B()),
                     mk_rhd(mk_and(mk_dia(A()), mk_box(C())), mk_and(B(), mk_box(C()))))},
      {"W*", mk_impl(mk_rhd(A(), B()),
                     mk_rhd(mk_and(B(), mk_box(C())),
                            mk_and(mk_and(B(), mk_box(C())), mk_box(mk_neg(A())))))},
      {"P0", mk_impl(mk_rhd(A(), mk_dia(B())), mk_box(mk_rhd(A(), B())))},
      {"R", r_scheme(0)},
      {"KM1", mk_impl(mk_rhd(A(), mk_dia(B())), mk_box(mk_impl(A(), mk_dia(B()))))},
      {"KM2", mk_impl(mk_rhd(A(), B()),
                      mk_impl(mk_box(mk_impl(B(), mk_dia(C()))),
                              mk_box(mk_impl(A(), mk_dia(C())))))},
  };
  return schemes;
}

std::optional<Fml> scheme_by_id(const std::string& id) {
  for (const NamedScheme& s : axiom_schemes()) {
    if (s.id == id) return s.scheme;
  }
  for (const NamedScheme& s : scheme_catalog()) {
    if (s.id == id) return s.scheme;
  }
  if (id.rfind("Rn:", 0) == 0) {
    if (auto n = parse_index(id, 3, 0)) return r_scheme(*n);
  }
  if (id.rfind("Un:", 0) == 0) {
    if (auto n = parse_index(id, 3, 1)) return u_scheme(*n);
  }
  return std::nullopt;
}

std::optional<NamedScheme> scheme_for_condition(const ConditionId& c) {
  auto named = [](const std::string& id) -> std::optional<NamedScheme> {
    return NamedScheme{id, *scheme_by_id(id)};
  };
  switch (c.kind) {
    case ConditionKind::MOrd:
    case ConditionKind::MGen:
      return named("M");
    case ConditionKind::M0Ord:
    case ConditionKind::M0Gen:
      return named("M0");
    case ConditionKind::KW1Ord:
      return named("KW1");
    case ConditionKind::WfamOrd:
    case ConditionKind::WGen:
      return named("W");
    case ConditionKind::KM1Gen:
      return named("KM1");
    case ConditionKind::PGen:
      return named("P");
    case ConditionKind::P0Gen:
      return named("P0");
    case ConditionKind::RGen:
      return named("R");
    case ConditionKind::RnOrd:
    case ConditionKind::RnGen:
      return NamedScheme{"Rn:" + std::to_string(c.n), r_scheme(c.n)};
    case ConditionKind::NotWGen:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace ilkit
