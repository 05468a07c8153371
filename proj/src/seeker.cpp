// Copyright 2026 The tame-certify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tame/seeker.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "tame/certificate_io.hpp"
#include "tame/error.hpp"

namespace tame {

namespace {

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

PrimeSet sorted_copy(std::vector<u64> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<u64> concat(const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ResidueWitness witness(u64 a, u64 l, u64 p) {
  return {static_cast<i64>(a), l, local_index(static_cast<i64>(a), l, p)};
}

FpVector pad(const FpVector& v, std::size_t size) {
  FpVector out = v;
  out.resize(size, 0);
  return out;
}

// Every local index a certificate relies on: each column place l of the
// final genus group against every t in T and every auxiliary prime.
std::vector<ResidueWitness> witness_table(u64 p, const PrimeSet& T,
                                          const PrimeSet& S_final,
                                          const std::vector<u64>& aux) {
  const auto sources = set_union(T, sorted_copy(aux));
  std::vector<ResidueWitness> out;
  for (u64 l : min_set(S_final, p)) {
    for (u64 a : sources) {
      if (a != l) out.push_back(witness(a, l, p));
    }
  }
  return out;
}

// chi rows: diagonal nonzero on the S0 block, zero on the q block.
// psi rows: anything on the S0 block, diagonal nonzero on the q block.
bool has_block_shape(const FpMatrix& m, std::size_t half) {
  if (m.rows() != 2 * half || m.cols() != 2 * half) return false;
  for (std::size_t r = 0; r < 2 * half; ++r) {
    for (std::size_t c = 0; c < 2 * half; ++c) {
      const bool nonzero = m.at(r, c) != 0;
      if (r < half) {
        if (nonzero != (c == r)) return false;
      } else if (c >= half) {
        if (nonzero != (c == r)) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> row_labels(std::size_t m) {
  std::vector<std::string> out;
  for (const char* name : {"chi", "psi"}) {
    for (std::size_t a = 1; a <= m; ++a) {
      out.push_back(std::string(name) + "_" + std::to_string(a) + " u eta_" +
                    std::to_string(a));
    }
  }
  return out;
}

std::vector<CharacterPair> cup_rows(const ChiPsi& cp,
                                    const std::vector<Character>& eta) {
  std::vector<CharacterPair> pairs;
  for (std::size_t a = 0; a < eta.size(); ++a) pairs.emplace_back(cp.chi[a], eta[a]);
  for (std::size_t a = 0; a < eta.size(); ++a) pairs.emplace_back(cp.psi[a], eta[a]);
  return pairs;
}

}  // namespace

PrimeSet find_T0(const PrimeSet& /*T*/, u64 /*p*/) {
  return {};
}

S0Build build_S0(const PrimeSet& T, const PrimeSet& avoid, u64 p, u64 bound,
                 bool min_size) {
  S0Build out;
  out.kill_sets = vskill_search(T, avoid, p, bound, 2);
  for (const auto& set : out.kill_sets) {
    out.primes.insert(out.primes.end(), set.begin(), set.end());
  }
  if (!min_size) return out;
  const std::size_t target = T.size() + 2;
  PrimeStream stream(p, true,
                     set_union(set_union(T, avoid), sorted_copy(out.primes)));
  while (out.primes.size() < target) {
    const u64 l = stream.next();
    if (l > bound) throw SearchExhausted("build_S0", bound);
    out.primes.push_back(l);
    out.enlarged = true;
  }
  return out;
}

BaContext BaContext::make(u64 p, PrimeSet T, PrimeSet avoid,
                          std::vector<u64> S0, std::size_t a,
                          std::vector<u64> previous_q) {
  if (a < 1 || a > S0.size()) {
    throw PreconditionError("search condition index out of range");
  }
  BaContext ctx{p, std::move(T), std::move(avoid), std::move(S0), {}, nullptr,
                a, std::move(previous_q)};
  for (u64 x : ctx.S0) ctx.s_elements.push_back(s_element(x, ctx.T));
  ctx.group = GenusGroup::make_ordered(p, ctx.S0, ctx.T);
  return ctx;
}

BaCheck check_Ba(u64 q, const BaContext& ctx) {
  const u64 p = ctx.p;
  if (!is_prime(q)) throw PreconditionError(std::to_string(q) + " is not prime");
  if (!is_one_mod(q, p)) throw NotOneModP(q, p);
  if (std::find(ctx.S0.begin(), ctx.S0.end(), q) != ctx.S0.end() ||
      std::find(ctx.previous_q.begin(), ctx.previous_q.end(), q) !=
          ctx.previous_q.end()) {
    throw PreconditionError(std::to_string(q) + " is already in use");
  }
  const std::size_t a = ctx.a - 1;
  BaCheck r;
  auto fail = [&r](int which) {
    r.failed_condition = which;
    return r;
  };

  if (contains(ctx.T, q) || contains(ctx.avoid, q)) return fail(1);
  if (!splits_completely_in_unit_kummer(q, ctx.T, p)) return fail(1);
  for (std::size_t b = 0; b < ctx.S0.size(); ++b) {
    if (b != a && !is_pth_power(ctx.s_elements[b], q, p)) return fail(2);
  }
  if (is_pth_power(ctx.s_elements[a], q, p)) return fail(3);

  const auto& g = *ctx.group;
  auto gens = g.relations().row_vectors();
  gens.push_back(g.unit_vector(ctx.S0[a]));
  if (in_span(frobenius_vector(g, q), gens, p)) return fail(4);

  for (u64 qb : ctx.previous_q) {
    if (!is_pth_power(static_cast<i64>(q), qb, p) ||
        !is_pth_power(static_cast<i64>(qb), q, p)) {
      return fail(5);
    }
  }

  r.ok = true;
  for (u64 t : ctx.T) r.witnesses.push_back(witness(t, q, p));
  for (u64 x : ctx.S0) r.witnesses.push_back(witness(x, q, p));
  for (u64 x : ctx.S0) r.witnesses.push_back(witness(q, x, p));
  for (u64 qb : ctx.previous_q) {
    r.witnesses.push_back(witness(q, qb, p));
    r.witnesses.push_back(witness(qb, q, p));
  }
  return r;
}

QSequence find_q_sequence(u64 p, const PrimeSet& T, const PrimeSet& avoid,
                          const std::vector<u64>& S0, u64 bound) {
  QSequence out;
  for (std::size_t a = 1; a <= S0.size(); ++a) {
    const auto ctx = BaContext::make(p, T, avoid, S0, a, out.q);
    PrimeStream stream(p, true,
                       set_union(set_union(T, avoid),
                                 sorted_copy(concat(S0, out.q))));
    for (;;) {
      const u64 q = stream.next();
      if (q > bound) throw SearchExhausted("find_q_sequence", bound, a);
      auto check = check_Ba(q, ctx);
      if (check.ok) {
        out.q.push_back(q);
        out.witnesses.push_back(std::move(check.witnesses));
        break;
      }
    }
  }
  return out;
}

ChiPsi choose_chi_psi(u64 p, const PrimeSet& T, const std::vector<u64>& S0,
                      const std::vector<u64>& q_list) {
  if (q_list.size() != S0.size()) {
    throw PreconditionError("need one q per element of S0");
  }
  const std::size_t m = S0.size();
  const auto base = GenusGroup::make_ordered(p, S0, T);
  ChiPsi out{GenusGroup::make_ordered(p, concat(S0, q_list), T), {}, {}};
  const auto relations = base->relations().row_vectors();
  for (std::size_t a = 0; a < m; ++a) {
    const auto frob = frobenius_vector(*base, q_list[a]);
    auto zero = relations;
    zero.push_back(frob);
    const auto chi =
        solve_functional(zero, {base->unit_vector(S0[a])}, m, p);
    const auto psi = solve_functional(relations, {frob}, m, p);
    if (!chi || !psi) {
      throw PreconditionError("no character pair for index " +
                              std::to_string(a + 1) + ": Frob of " +
                              std::to_string(q_list[a]) +
                              " lies in the inertia group of " +
                              std::to_string(S0[a]));
    }
    out.chi.emplace_back(out.group, pad(*chi, 2 * m));
    out.psi.emplace_back(out.group, pad(*psi, 2 * m));
  }
  return out;
}

namespace {

std::vector<Character> unramified_outside_S0(const GenusGroupPtr& aux,
                                             const std::vector<u64>& S0,
                                             const PrimeSet& T) {
  const auto base = GenusGroup::make_ordered(aux->modulus(), S0, T);
  std::vector<Character> out;
  for (const auto& c : character_basis(base)) {
    out.emplace_back(aux, pad(c.coeffs(), aux->ambient_dim()));
  }
  return out;
}

std::vector<FpVector> coeffs_of(const std::vector<Character>& cs) {
  std::vector<FpVector> out;
  for (const auto& c : cs) out.push_back(c.coeffs());
  return out;
}

Certificate certify_unsealed(const MarkedSetup& setup, u64 bound) {
  validate(setup);
  const u64 p = setup.p;
  Certificate cert;
  cert.p = p;
  cert.S = setup.S;
  cert.T = setup.T;
  cert.avoid = setup.avoid;
  cert.search_bound = bound;
  cert.T0 = find_T0(setup.T, p);
  cert.min_size = setup.T.size() + 2;

  const auto excluded = set_union(setup.S, setup.avoid);
  try {
    auto s0 = build_S0(setup.T, excluded, p, bound);
    cert.S0 = std::move(s0.primes);
    cert.kill_sets = std::move(s0.kill_sets);
    cert.S0_enlarged = s0.enlarged;
  } catch (const SearchExhausted& e) {
    cert.failure = Failure{"build_S0", e.index, e.what()};
    return cert;
  }
  for (u64 x : cert.S0) cert.s_elements[x] = s_element(x, setup.T);

  try {
    cert.q_list = find_q_sequence(p, setup.T, excluded, cert.S0, bound).q;
  } catch (const SearchExhausted& e) {
    cert.failure = Failure{"find_q_sequence", e.index, e.what()};
    return cert;
  }
  for (u64 x : cert.q_list) cert.s_elements[x] = s_element(x, setup.T);

  const std::size_t m = cert.S0.size();
  const auto aux = concat(cert.S0, cert.q_list);
  cert.S_final = set_union(setup.S, sorted_copy(aux));
  cert.residue_witnesses = witness_table(p, setup.T, cert.S_final, aux);

  ChiPsi cp;
  try {
    cp = choose_chi_psi(p, setup.T, cert.S0, cert.q_list);
  } catch (const PreconditionError& e) {
    cert.failure = Failure{"choose_chi_psi", 0, e.what()};
    return cert;
  }
  std::vector<Character> eta;
  for (u64 q : cert.q_list) eta.push_back(Character::coordinate(cp.group, q));
  cert.chi = coeffs_of(cp.chi);
  cert.psi = coeffs_of(cp.psi);
  cert.eta = coeffs_of(eta);

  const auto matrix = cup_matrix(cp.group, cup_rows(cp, eta));
  cert.matrix_columns = matrix.columns;
  cert.matrix_rows = row_labels(m);
  cert.matrix = matrix.entries.row_vectors();
  cert.rank = rank(matrix.entries);

  const MarkedSetup aux_setup{p, sorted_copy(aux), setup.T, {}};
  cert.h_vector = h_vector(aux_setup);

  const auto U = unramified_outside_S0(cp.group, cert.S0, setup.T);
  cert.U = coeffs_of(U);
  cert.V = cert.eta;

  const MarkedSetup final_setup{p, cert.S_final, setup.T, {}};
  const auto final_group = genus_group(final_setup);
  auto& checks = cert.checks;
  checks.v_final_dim = v_space(final_setup).dim();
  checks.ramified = std::all_of(aux.begin(), aux.end(), [&](u64 x) {
    return ramifies(*final_group, x);
  });
  checks.surjective = v_space(aux_setup).dim() == 0 &&
                      surjectivity_certified(aux_setup, matrix);
  checks.block_shape = has_block_shape(matrix.entries, m);
  auto uv = cert.U;
  uv.insert(uv.end(), cert.V.begin(), cert.V.end());
  checks.direct_sum =
      rank(FpMatrix(p, uv, cp.group->ambient_dim())) == uv.size() &&
      uv.size() == cp.group->quotient_dim();
  checks.mild = checks.direct_sum && mild_verify(U, eta, cp.group);

  std::vector<std::string> bad;
  if (checks.v_final_dim != 0) bad.push_back("V of the final set is nonzero");
  if (!checks.ramified) bad.push_back("an auxiliary prime is unramified");
  if (!checks.surjective) bad.push_back("cup product is not surjective");
  if (!checks.block_shape) bad.push_back("cup matrix lacks the block shape");
  if (!checks.direct_sum) bad.push_back("U + V is not a direct sum");
  if (!checks.mild) bad.push_back("mildness test failed");
  if (bad.empty() && cert.rank == 2 * m) {
    cert.verdict = "pass";
  } else {
    std::string msg;
    for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
    cert.failure = Failure{"verification", 0, msg};
  }
  return cert;
}

}  // namespace

Certificate certify(const MarkedSetup& setup, u64 bound) {
  auto cert = certify_unsealed(setup, bound);
  cert.digest = content_digest(cert);
  return cert;
}

VerifyReport verify_report(const Certificate& c) {
  VerifyReport report;
  auto expect = [&report](bool cond, const std::string& what) {
    if (!cond) report.failures.push_back(what);
    return cond;
  };

  expect(c.schema == kSchema, "unknown schema");
  expect(c.tool_version == kToolVersion, "tool version mismatch");
  expect(c.digest == content_digest(c), "digest does not match the content");
  if (!expect(c.verdict == "pass" && !c.failure,
              "certificate records a failed search")) {
    return report;
  }

  try {
    const u64 p = c.p;
    const MarkedSetup setup{p, c.S, c.T, c.avoid};
    validate(setup);
    auto reduced = [p](const std::vector<FpVector>& rows) {
      return std::all_of(rows.begin(), rows.end(), [p](const FpVector& v) {
        return std::all_of(v.begin(), v.end(), [p](u64 x) { return x < p; });
      });
    };
    if (!expect(reduced(c.chi) && reduced(c.psi) && reduced(c.eta) &&
                    reduced(c.matrix) && reduced(c.U) && reduced(c.V),
                "F_p entry outside [0, p)")) {
      return report;
    }
    const std::size_t m = c.S0.size();
    expect(c.T0.empty(), "T0 must be empty over Q");
    expect(c.min_size == c.T.size() + 2, "wrong minimum size");
    expect(m >= c.min_size, "S0 below the minimum size");
    if (!expect(c.q_list.size() == m, "q_list and S0 differ in length")) {
      return report;
    }

    const auto aux = concat(c.S0, c.q_list);
    std::set<u64> seen;
    for (u64 x : aux) {
      expect(is_prime(x) && is_one_mod(x, p),
             std::to_string(x) + " is not a prime = 1 mod p");
      expect(x <= c.search_bound, std::to_string(x) + " exceeds the bound");
      expect(seen.insert(x).second, std::to_string(x) + " repeated");
      expect(!contains(c.S, x) && !contains(c.T, x) && !contains(c.avoid, x),
             std::to_string(x) + " meets S, T or avoid");
    }
    if (!report.ok()) return report;

    // Kill sets and the per-element kill property of S0.
    std::vector<u64> prefix;
    for (const auto& set : c.kill_sets) {
      expect(v_dim(p, set, c.T) == 0, "a kill set leaves V^T nonzero");
      prefix.insert(prefix.end(), set.begin(), set.end());
    }
    expect(c.kill_sets.size() == 2, "expected two kill sets");
    expect(prefix.size() <= m &&
               std::equal(prefix.begin(), prefix.end(), c.S0.begin()),
           "kill sets do not open S0");
    expect(c.S0_enlarged == (m > prefix.size()), "enlargement flag wrong");
    expect(!c.S0_enlarged || prefix.size() < c.min_size,
           "S0 enlarged beyond need");
    for (u64 x : c.S0) {
      PrimeSet rest;
      for (u64 y : c.S0) {
        if (y != x) rest.push_back(y);
      }
      expect(v_dim(p, sorted_copy(rest), c.T) == 0,
             "V^T of S0 without " + std::to_string(x) + " is nonzero");
    }

    std::map<u64, i64> s_expected;
    for (u64 x : aux) s_expected[x] = s_element(x, c.T);
    expect(c.s_elements == s_expected, "s-elements differ");
    expect(c.S_final == set_union(c.S, sorted_copy(aux)), "S_final differs");

    const auto excluded = set_union(c.S, c.avoid);
    for (std::size_t a = 1; a <= m; ++a) {
      std::vector<u64> previous(c.q_list.begin(),
                                c.q_list.begin() + static_cast<long>(a - 1));
      const auto ctx = BaContext::make(p, c.T, excluded, c.S0, a, previous);
      const auto check = check_Ba(c.q_list[a - 1], ctx);
      expect(check.ok, "search conditions for q_" + std::to_string(a) + " fail at " +
                           std::to_string(check.failed_condition));
    }

    expect(c.residue_witnesses == witness_table(p, c.T, c.S_final, aux),
           "residue witnesses differ from recomputation");

    // Characters.
    const auto group = GenusGroup::make_ordered(p, aux, c.T);
    const auto base = GenusGroup::make_ordered(p, c.S0, c.T);
    if (!expect(c.chi.size() == m && c.psi.size() == m && c.eta.size() == m,
                "character lists have the wrong length")) {
      return report;
    }
    ChiPsi cp{group, {}, {}};
    std::vector<Character> eta;
    for (std::size_t a = 0; a < m; ++a) {
      cp.chi.emplace_back(group, c.chi[a]);
      cp.psi.emplace_back(group, c.psi[a]);
      eta.emplace_back(group, c.eta[a]);
      expect(eta.back() == Character::coordinate(group, c.q_list[a]),
             "eta_" + std::to_string(a + 1) + " is not dual to q");
      const auto frob = frobenius_vector(*base, c.q_list[a]);
      for (const auto* ch : {&cp.chi.back(), &cp.psi.back()}) {
        for (u64 q : c.q_list) {
          expect(ch->on_inertia(q) == 0, "chi/psi ramified outside S0");
        }
      }
      const FpVector chi_base(c.chi[a].begin(), c.chi[a].begin() + static_cast<long>(m));
      const FpVector psi_base(c.psi[a].begin(), c.psi[a].begin() + static_cast<long>(m));
      expect(cp.chi.back().on_inertia(c.S0[a]) != 0,
             "chi_" + std::to_string(a + 1) + " unramified at p_a");
      expect(dot(chi_base, frob, p) == 0,
             "chi_" + std::to_string(a + 1) + " does not kill Frob(q_a)");
      expect(dot(psi_base, frob, p) != 0,
             "psi_" + std::to_string(a + 1) + " kills Frob(q_a)");
    }

    const auto matrix = cup_matrix(group, cup_rows(cp, eta));
    expect(c.matrix_columns == matrix.columns, "matrix columns differ");
    expect(c.matrix_rows == row_labels(m), "matrix row labels differ");
    expect(c.matrix == matrix.entries.row_vectors(), "matrix entries differ");
    const auto r = rank(matrix.entries);
    expect(c.rank == r, "rank differs");
    expect(r == 2 * m, "rank is not 2m");
    expect(has_block_shape(matrix.entries, m), "block shape violated");

    const MarkedSetup aux_setup{p, sorted_copy(aux), c.T, {}};
    const auto h = h_vector(aux_setup);
    expect(c.h_vector == h, "h-vector differs");
    expect(h.h2 == 2 * m, "h2 is not 2m");

    const MarkedSetup final_setup{p, c.S_final, c.T, {}};
    const auto final_group = genus_group(final_setup);
    CertificateChecks checks;
    checks.v_final_dim = v_space(final_setup).dim();
    checks.ramified = std::all_of(aux.begin(), aux.end(), [&](u64 x) {
      return ramifies(*final_group, x);
    });
    checks.surjective = v_space(aux_setup).dim() == 0 &&
                        surjectivity_certified(aux_setup, matrix);
    checks.block_shape = has_block_shape(matrix.entries, m);

    std::vector<Character> U;
    for (const auto& u : c.U) {
      U.emplace_back(group, u);
      for (u64 q : c.q_list) {
        expect(U.back().on_inertia(q) == 0, "U is ramified outside S0");
      }
    }
    expect(c.U.size() == base->quotient_dim() &&
               rank(FpMatrix(p, c.U, group->ambient_dim())) == c.U.size(),
           "U is not a basis of the characters unramified outside S0");
    expect(c.V == c.eta, "V differs from the eta characters");
    expect(c.U == coeffs_of(unramified_outside_S0(group, c.S0, c.T)),
           "U differs from the canonical basis");
    const auto canonical = choose_chi_psi(p, c.T, c.S0, c.q_list);
    expect(c.chi == coeffs_of(canonical.chi) && c.psi == coeffs_of(canonical.psi),
           "chi/psi differ from the canonical choice");
    auto uv = c.U;
    uv.insert(uv.end(), c.V.begin(), c.V.end());
    checks.direct_sum =
        rank(FpMatrix(p, uv, group->ambient_dim())) == uv.size() &&
        uv.size() == group->quotient_dim();
    checks.mild = checks.direct_sum && mild_verify(U, eta, group);

    expect(checks.v_final_dim == 0, "V of the final set is nonzero");
    expect(checks.ramified, "an auxiliary prime is unramified");
    expect(checks.surjective, "cup product is not surjective");
    expect(checks.direct_sum, "U + V is not a direct sum");
    expect(checks.mild, "mildness test failed");
    expect(c.checks == checks, "recorded checks differ");
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("exception: ") + e.what());
  }
  return report;
}

bool verify(const Certificate& cert) { return verify_report(cert).ok(); }

}  // namespace tame
