#include "ilkit/filtration.hpp"

#include "ilkit/semantics.hpp"

namespace ilkit {

FiltrationResult filtrate(const GeneralModel& m, const AdequateSet& gamma) {
  ValidationReport rep = validate_general(m);
  if (!rep.ok) throw ModelError("input model is illegal: " + describe(rep));
  const int n = m.n();

  const Rel z = largest_bisimulation(m, m);
  for (World w = 0; w < n; ++w) {
    if (!ws_has(z[w], w)) throw ModelError("auto-bisimulation is not reflexive");
    for (WorldSet s = z[w]; s;) {
      const World u = std::countr_zero(s);
      s &= s - 1;
      if (z[u] != z[w]) throw ModelError("auto-bisimulation is not an equivalence");
    }
  }

  Quotient q;
  q.class_of.assign(n, -1);
  for (World w = 0; w < n; ++w) {
    if (q.class_of[w] >= 0) continue;
    const int c = static_cast<int>(q.classes.size());
    q.classes.push_back(z[w]);
    q.class_names.push_back(m.names[w]);
    ws_for_each(z[w], [&](World u) { q.class_of[u] = c; });
  }
  const int k = static_cast<int>(q.classes.size());

  auto class_image = [&](WorldSet v) {
    WorldSet img = 0;
    ws_for_each(v, [&](World x) { img |= ws_single(q.class_of[x]); });
    return img;
  };

  // Truth sets of the boxed members of gamma; an R-edge survives the
  // quotient only when one of them flips from false to true along it.
  std::vector<WorldSet> boxed;
  for (const Fml& f : gamma.gamma) {
    if (f->op == Op::Box) boxed.push_back(truth_set(m, f));
  }
  auto box_flip = [&](World w, World u) {
    for (WorldSet t : boxed) {
      if (!ws_has(t, w) && ws_has(t, u)) return true;
    }
    return false;
  };

  GeneralModel out;
  out.qt_variant = 2;
  out.names = q.class_names;
  out.R.assign(k, 0);
  out.S.assign(k, std::vector<std::vector<WorldSet>>(k));
  for (World w = 0; w < n; ++w) {
    ws_for_each(m.R[w], [&](World u) {
      if (box_flip(w, u)) out.R[q.class_of[w]] |= ws_single(q.class_of[u]);
    });
  }
  for (int cw = 0; cw < k; ++cw) {
    const WorldSet domain = out.R[cw];
    ws_for_each(domain, [&](int cu) {
      // Nonempty class sets inside R~[cw], ascending.
      WorldSet vq = 0;
      do {
        vq = (vq - domain) & domain;
        if (!vq) continue;
        bool ok = true;
        ws_for_each(q.classes[cw], [&](World w) {
          ws_for_each(q.classes[cu] & m.R[w], [&](World u) {
            bool some = false;
            for (WorldSet v : m.S[w][u]) {
              if (ws_subset(class_image(v), vq)) {
                some = true;
                break;
              }
            }
            if (!some) ok = false;
          });
        });
        if (ok) out.S[cw][cu].push_back(vq);
      } while (vq != domain);
    });
  }
  for (const auto& [atom, mask] : m.valuation) {
    if (gamma.gamma.count(mk_atom(atom))) out.valuation[atom] = class_image(mask);
  }

  ValidationReport out_rep = validate_general(out);
  if (!out_rep.ok) {
    throw ModelError("filtration produced an illegal model: " + describe(out_rep));
  }
  return FiltrationResult{std::move(out), std::move(q)};
}

}  // namespace ilkit
