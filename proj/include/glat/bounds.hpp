#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glat/errors.hpp"
#include "glat/formula.hpp"
#include "glat/int_matrix.hpp"
#include "glat/json_io.hpp"

namespace glat {

/// One row of an inequality case analysis. holds iff lhs >= rhs.
///
/// scale "exact": both sides are the integers of the inequality itself.
/// scale "log2": both sides are exponents of 2 scaled by a common positive
/// integer, with rhs rounded up from a certified upper bound, so holds is
/// sound but may be conservative.
struct BoundVerdict {
  std::string label;
  std::map<std::string, long> params;
  BigInt lhs;
  BigInt rhs;
  bool holds;
  std::string scale = "exact";
};

/// |PSL_m(q)|. Throws NotPrimePower, InvalidArgument when m < 2.
BigInt psl_order(unsigned long m, const BigInt& q);

struct PrimePower {
  BigInt prime;
  unsigned long exponent;
};
std::optional<PrimePower> prime_power(const BigInt& q);

struct NumericalLemma {
  bool hypothesis;  // b >= a and 2^a >= a c
  bool conclusion;  // 2^b >= b c
};
NumericalLemma check_numerical_lemma(unsigned long a, const BigInt& c, unsigned long b);

/// 2^e >= k * e for a positive integer e, without materializing 2^e when it
/// is obviously large. e <= 0 never holds.
bool power_of_two_dominates(const BigInt& e, const BigInt& k);

enum class PrimeCase { MetacyclicSmall, MetacyclicFull, LinearSmall, LinearFull };
std::string to_string(PrimeCase c);
/// Accepts "II.i", "II.ii", "III.i", "III.ii". Throws InvalidCase.
PrimeCase parse_prime_case(const std::string& s);

/// Case inequalities for irreducible groups in prime dimension p with
/// ord_p(2) = (p-1)/a:
///   II.i   2^((p-1)/a) >= p^2 (p-1)
///   II.ii  2^p >= a 2^floor(2p/3) p (p-1)
///   III.i  2^((p-1)/a) >= (p^2+1)^log2(p^2+1) log2(p) p
///   III.ii 2^(p/3) >= a (p^2+1)^log2(p^2+1) log2(p)
/// l only labels the verdict. Throws InvalidCase for p not an odd prime,
/// l outside [1, a], or a not dividing p-1 in the (p-1)/a cases.
BoundVerdict thmA_case_check(unsigned long p, unsigned long a, unsigned long l, PrimeCase c);

/// |G| p <= 2^p with |G| <= 2^(l(p-1)/a + 1) p (p-1).
/// Throws InvalidCase when a does not divide l(p-1).
BoundVerdict mon_metacyclic_bound(unsigned long p, unsigned long l, unsigned long a);

/// Whether the case applies to p: p an odd prime and, for the (p-1)/a cases, a | p-1.
bool case_applies(unsigned long p, unsigned long a, PrimeCase c);

/// Verdicts for every applicable prime in [lo, hi], ascending.
std::vector<BoundVerdict> prime_case_scan(unsigned long a, unsigned long l, PrimeCase c, unsigned long lo,
                                          unsigned long hi);
std::vector<BoundVerdict> prime_case_scan_serial(unsigned long a, unsigned long l, PrimeCase c, unsigned long lo,
                                                 unsigned long hi);

struct Threshold {
  unsigned long threshold;  // every applicable prime in [threshold, horizon] holds
  unsigned long horizon;
  std::size_t primes_checked;
  std::vector<unsigned long> anomalies;  // primes below threshold that hold
};

/// Smallest applicable prime N such that the case holds for every applicable
/// prime in [N, horizon]. Throws HorizonTooSmall when the largest applicable
/// prime up to the horizon fails or none exists.
Threshold min_threshold(unsigned long a, PrimeCase c, unsigned long horizon = 10007, unsigned long l = 1);

struct PrimeOfForm {
  BigInt p;
  BigInt q;
  unsigned long m;
  friend bool operator==(const PrimeOfForm& x, const PrimeOfForm& y) { return x.p == y.p && x.q == y.q && x.m == y.m; }
  friend bool operator<(const PrimeOfForm& x, const PrimeOfForm& y) {
    if (x.p != y.p) return x.p < y.p;
    if (x.q != y.q) return x.q < y.q;
    return x.m < y.m;
  }
};

/// Every prime (q^m - 1)/(q - 1) with q <= q_max a prime power and 2 <= m <= m_max,
/// sorted by (p, q, m).
std::vector<PrimeOfForm> prime_of_form(unsigned long q_max, unsigned long m_max);

// Simple-group data and the almost-simple scan.

struct FamilyConstraints {
  unsigned long n_min = 0;
  std::optional<unsigned long> n_max;
  std::optional<int> n_parity;  // 0 even, 1 odd
  std::optional<int> q_parity;
  std::optional<std::pair<unsigned long, unsigned long>> q_mod;  // q = r mod m as (m, r)
  std::vector<unsigned long> q_in;
  std::vector<unsigned long> q_not_in;
  unsigned long q_min = 2;
  std::optional<unsigned long> q_divisible_by;
  std::optional<unsigned long> q_not_divisible_by;
  std::optional<std::string> q_formula;  // q determined by n
};

struct FamilyRecord {
  std::string name;
  std::vector<std::string> parameters;  // printed tuple, from {"n", "q"}
  FamilyConstraints constraints;
  std::optional<std::string> order_formula;
  std::optional<std::string> aut_formula;
  std::string dim_bound_formula;
  char bound_kind;  // 'p' or 'r'
  std::string source;
  std::vector<std::vector<long>> expected_remaining;
  std::string note;
};

struct SporadicRecord {
  std::string name;
  BigInt aut_order;
  std::optional<unsigned long> rdim;
  bool expected_fail;
};

struct AutOrderCheck {
  std::string group;
  std::string family;
  std::map<std::string, long> params;
  BigInt aut_order;
  std::string out;
  std::optional<unsigned long> min_prime_dim;
};

struct SimpleGroupData {
  std::string version;
  std::vector<FamilyRecord> families;
  std::vector<SporadicRecord> sporadics;
  std::vector<AutOrderCheck> aut_checks;
};

/// Throws FormatError on schema violations and UnknownFormula on formulas
/// that do not parse.
SimpleGroupData simple_group_data_from_json(const Json& j);
SimpleGroupData load_simple_group_data(const std::filesystem::path& path);

struct ScanCaps {
  unsigned long n_max = 10;
  unsigned long q_max = 128;
};
/// "n=10,q=128"; missing keys keep defaults. Throws InvalidArgument.
ScanCaps parse_scan_caps(const std::string& s);

/// The three inequalities for one group: dimension bound d of the given kind,
/// 2^d >= 2|Aut| d, and 2^29 >= 58|Aut|.
struct AlmostSimpleInequalities {
  bool dimension;
  bool twenty_nine;
  bool any() const { return dimension || twenty_nine; }
};
AlmostSimpleInequalities almost_simple_inequalities(const std::optional<Rational>& dim_bound, const BigInt& aut);

struct RemainingCase {
  std::vector<long> params;
  BigInt dim_bound;
  BigInt aut_order;
};

struct FamilyScan {
  std::string name;
  std::string status;  // "scanned" or "unscanned"
  std::size_t points = 0;
  std::vector<RemainingCase> remaining;
  std::vector<std::vector<long>> expected;
  bool matches = false;
};

struct SporadicScan {
  std::string name;
  BigInt aut_order;
  std::optional<unsigned long> rdim;
  AlmostSimpleInequalities inequalities;
  bool expected_fail;
};

struct AlmostSimpleReport {
  std::vector<FamilyScan> families;
  std::vector<SporadicScan> sporadics;
  std::vector<std::string> sporadic_failures;
  bool sporadics_match;
  bool families_match;  // every scanned family
};

/// Parameter points of a family within the caps, ascending.
std::vector<Bindings> family_points(const FamilyRecord& f, const ScanCaps& caps);

/// Evaluates |Aut| of a family at a point. Throws UnknownFormula when the
/// family has no aut formula or the value is not a positive integer.
BigInt family_aut_order(const FamilyRecord& f, const Bindings& point);
BigInt family_order(const FamilyRecord& f, const Bindings& point);

FamilyScan scan_family(const FamilyRecord& f, const ScanCaps& caps);
AlmostSimpleReport almost_simple_scan(const SimpleGroupData& data, const ScanCaps& caps = {});

Json to_json(const BoundVerdict& v);
Json to_json(const AlmostSimpleReport& r);

}  // namespace glat
