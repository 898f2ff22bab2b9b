#pragma once

// Hand-entered reference identities. Element indices for C3: 0 = e, 1 = g,
// 2 = g^2.

#include <array>
#include <vector>

#include "trid/trace_system.hpp"

namespace trid::fixtures {

struct Term {
  int gamma, k, l;
  std::array<int, 3> rep;
};

// 9 zeta_{1,e} zeta_{2,e} zeta_{3,e} over C3, 25 terms.
inline const std::vector<Term> kC3Identity = {
    {3, 3, 4, {0, 0, 0}},  {5, 2, 3, {0, 0, 0}},  {-3, 2, 4, {0, 0, 0}}, {4, 1, 4, {0, 0, 0}},
    {-5, 2, 4, {0, 0, 1}}, {4, 1, 2, {0, 0, 1}},  {-2, 1, 4, {0, 0, 1}}, {1, 1, 2, {0, 0, 2}},
    {-4, 1, 4, {0, 0, 2}}, {-5, 1, 3, {0, 1, 0}}, {3, 1, 2, {0, 1, 1}},  {2, 1, 2, {0, 1, 2}},
    {3, 1, 3, {0, 1, 2}},  {5, 1, 2, {0, 2, 1}},  {-5, 1, 4, {0, 2, 1}}, {5, 1, 3, {0, 2, 2}},
    {-2, 1, 4, {0, 2, 2}}, {-3, 2, 4, {1, 0, 0}}, {5, 2, 3, {1, 0, 0}},  {-4, 2, 3, {1, 0, 1}},
    {-1, 2, 4, {1, 0, 2}}, {5, 2, 3, {2, 0, 0}},  {-1, 2, 3, {2, 0, 1}},  {-3, 2, 4, {2, 0, 1}},
    {-4, 2, 3, {2, 0, 2}},
};

inline TraceIdentity c3_identity() {
  const TupleCodec codec(3, 3);
  TraceIdentity id{TupleVertex::from_coords(codec, {0, 0, 0}), BigInt(9), {}};
  for (const auto& t : kC3Identity)
    id.terms.push_back({BigInt(t.gamma),
                        RowIndex{t.k, t.l, TupleVertex::from_coords(codec, {t.rep[0], t.rep[1], t.rep[2]})}});
  return id;
}

// 2 z1e z2e = z1e tr(z2e) + tr(z1e) z2e - tr(z1e z2g) over C2.
inline TraceIdentity c2_identity() {
  const TupleCodec codec(2, 2);
  TraceIdentity id{TupleVertex::from_coords(codec, {0, 0}), BigInt(2), {}};
  id.terms.push_back({BigInt(1), RowIndex{2, 3, TupleVertex::from_coords(codec, {0, 0})}});
  id.terms.push_back({BigInt(1), RowIndex{1, 2, TupleVertex::from_coords(codec, {0, 0})}});
  id.terms.push_back({BigInt(-1), RowIndex{1, 3, TupleVertex::from_coords(codec, {0, 1})}});
  return id;
}

}  // namespace trid::fixtures
