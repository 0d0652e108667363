// Copyright 2026 The Umbral Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UMBRAL_IDENTITIES_HPP
#define UMBRAL_IDENTITIES_HPP

#include <cstddef>

#include "umbral/rational.hpp"
#include "umbral/report.hpp"
#include "umbral/riordan.hpp"
#include "umbral/umbra.hpp"

// Each checker evaluates both sides of an identity along separate code paths
// and compares them exactly. Checkers never throw for a false identity; they
// throw only when the parameters are outside the identity's guard.
namespace umbral {

/// (x + y)^n = sum_k C(n,k) (y + ka)^{n-k} x (x - ka)^{k-1}, with the k = 0
/// term taken as y^n.
VerificationReport check_abel_classical(const Rational& x, const Rational& y, const Rational& a, std::size_t n);

/// E[(g + s)^n] = sum_k C(n,k) E[(g + k.a)^{n-k}] E[s (s - k.a)^{k-1}].
/// Requires n >= 1.
VerificationReport check_abel_I(const Umbra& g, const Umbra& s, const Umbra& a, std::size_t n);

/// E[(g + e.bell.D(a))^n] = sum_k C(n,k) E[(g + k.a)^{n-k}] E[e^k].
VerificationReport check_abel_II(const Umbra& g, const Umbra& e, const Umbra& a, std::size_t n);

/// Composition moments two ways: as moments of s.bell.D(a) against the
/// binomial expansion, and as ordinary coefficients of f_s(t f_a(t)) against
/// sum_k [t^k] f_s [t^{n-k}] f_a^k.
VerificationReport check_comp_mom(const Umbra& s, const Umbra& a, std::size_t n);

/// Four routes to E[K_{s,a}^n]: the Abel sum, the kappa umbra, the coefficient
/// form (n-1)! [t^{n-1}] f_s' f_a^{-n}, and n! [t^n] f_s((t f_a)^<-1>).
/// Requires n >= 1.
VerificationReport check_lif(const Umbra& s, const Umbra& a, std::size_t n);

/// E[(g + k.a)^{n-k}] expanded against an arbitrary umbra l and split m.
/// Requires n >= k.
VerificationReport check_mother(const Umbra& g, const Umbra& a, const Umbra& l, long n, long k, long m);

/// Entry (n, k) rebuilt from m and l:
///   (c_n/c_k) sum_i E[(m.K_{alpha,l})^i]/i! E[(gamma + (k-m).alpha + i.l)^{n-k-i}]/(n-k-i)!.
/// Requires n >= k >= 0 (index_violation otherwise).
Rational nonrec_entry(const RiordanArray& a, long n, long k, long m, const Umbra& l);

/// The same through entries of the array (gamma + (k-m).alpha, l).
Rational nonrec_entry_lambda(const RiordanArray& a, long n, long k, long m, const Umbra& l);

/// Binomial form for exponential weights; other weights are a weight_mismatch.
Rational nonrec_entry_exp(const RiordanArray& a, long n, long k, long m, const Umbra& l);

/// entry(n, k) against every nonrec form that applies to the array's weights.
VerificationReport check_nonrec(const RiordanArray& a, long n, long k, long m, const Umbra& l);

/// Horizontal recurrence. Guard: n >= k >= 0 and m <= k.
VerificationReport rec_horizontal(const RiordanArray& a, long n, long k, long m);

/// Vertical recurrence. Guard: n >= k >= m.
VerificationReport rec_vertical(const RiordanArray& a, long n, long k, long m);

/// Diagonal recurrence, evaluated with umbral coefficients and again with
/// i! [t^i] (f_alpha((t/f_alpha)^<-1>))^m. Guard: n >= k >= 0 and 2k - n >= m.
VerificationReport rec_diff(const RiordanArray& a, long n, long k, long m);

/// which = 1: n E[(k.L_a)^{n-k}] = k E[((-n).a)^{n-k}].
/// which = 2: n E[(k.a)^{n-k}]   = k E[(n.K_a)^{n-k}].
/// Guard: 1 <= k <= n.
VerificationReport check_lagrangek(int which, const Umbra& a, long n, long k);

/// A inverse(A) and inverse(A) A, symbolically and as matrix products,
/// against the identity on rows 0..rows.
VerificationReport check_group_inverse(const RiordanArray& a, std::size_t rows);

/// (AB)C and A(BC) against the numeric product of the three matrices.
VerificationReport check_group_assoc(const RiordanArray& a, const RiordanArray& b, const RiordanArray& c,
                                     std::size_t rows);

/// The array's action on eta, entrywise against the closed form, g_0..g_n.
VerificationReport check_ftra(const RiordanArray& a, const Umbra& eta, std::size_t n);

}  // namespace umbral

#endif  // UMBRAL_IDENTITIES_HPP
