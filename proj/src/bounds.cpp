#include "glat/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>

namespace glat {

namespace {

bool is_prime_ul(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt pow_ui(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

BigInt big(unsigned long x) { return BigInt(x); }

// RAII wrapper over an MPFR value with upward rounding throughout.
class Up {
 public:
  static constexpr mpfr_prec_t kPrec = 256;
  Up() { mpfr_init2(v_, kPrec); }
  explicit Up(unsigned long x) : Up() { mpfr_set_ui(v_, x, MPFR_RNDU); }
  Up(const Up& o) : Up() { mpfr_set(v_, o.v_, MPFR_RNDU); }
  Up& operator=(const Up&) = delete;
  ~Up() { mpfr_clear(v_); }

  static Up log2_of(const BigInt& x) {
    Up r;
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(r.v_, r.v_, MPFR_RNDU);
    return r;
  }
  // Monotone increasing in the argument, so an upper bound in gives one out.
  Up log2() const {
    Up r;
    mpfr_log2(r.v_, v_, MPFR_RNDU);
    return r;
  }
  Up operator+(const Up& o) const {
    Up r;
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDU);
    return r;
  }
  Up operator*(const Up& o) const {
    Up r;
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDU);
    return r;
  }
  BigInt ceil() const {
    BigInt r;
    mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDU);
    return r;
  }

 private:
  mpfr_t v_;
};

// Upper bound on log2((p^2+1)^log2(p^2+1) log2(p)), all terms positive for p >= 3.
Up linear_case_log2_upper(unsigned long p) {
  const BigInt p2 = big(p) * big(p) + 1;
  const Up l = Up::log2_of(p2);
  const Up lp = Up::log2_of(big(p));
  return l * l + lp.log2();
}

std::string case_label(unsigned long p, unsigned long a, unsigned long l, PrimeCase c) {
  std::ostringstream s;
  s << "prime p=" << p << " a=" << a << " case " << to_string(c) << " l=" << l;
  return s.str();
}

}  // namespace

std::optional<PrimePower> prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  BigInt x = q;
  BigInt u;
  if (mpz_even_p(x.get_mpz_t())) {
    u = 2;
  } else {
    for (u = 3; u * u <= x; u += 2)
      if (mpz_divisible_p(x.get_mpz_t(), u.get_mpz_t())) break;
    if (u * u > x) u = x;
  }
  unsigned long e = 0;
  while (mpz_divisible_p(x.get_mpz_t(), u.get_mpz_t())) {
    x /= u;
    ++e;
  }
  if (x != 1) return std::nullopt;
  return PrimePower{u, e};
}

BigInt psl_order(unsigned long m, const BigInt& q) {
  if (m < 2) throw InvalidArgument("psl_order needs m >= 2");
  if (!prime_power(q)) throw NotPrimePower(q.get_str() + " is not a prime power");
  BigInt num = pow_ui(q, m * (m - 1) / 2);
  for (unsigned long i = 2; i <= m; ++i) num *= pow_ui(q, i) - 1;
  BigInt d;
  const BigInt qm1 = q - 1;
  mpz_gcd_ui(d.get_mpz_t(), qm1.get_mpz_t(), m);
  return num / d;
}

NumericalLemma check_numerical_lemma(unsigned long a, const BigInt& c, unsigned long b) {
  return {b >= a && pow2(a) >= big(a) * c, pow2(b) >= big(b) * c};
}

bool power_of_two_dominates(const BigInt& e, const BigInt& k) {
  if (e <= 0) return false;
  const BigInt rhs = k * e;
  if (rhs <= 0) return true;
  const BigInt bits(static_cast<unsigned long>(mpz_sizeinbase(rhs.get_mpz_t(), 2)));
  if (e >= bits) return true;
  return pow2(e.get_ui()) >= rhs;
}

std::string to_string(PrimeCase c) {
  switch (c) {
    case PrimeCase::MetacyclicSmall: return "II.i";
    case PrimeCase::MetacyclicFull: return "II.ii";
    case PrimeCase::LinearSmall: return "III.i";
    case PrimeCase::LinearFull: return "III.ii";
  }
  return "";
}

PrimeCase parse_prime_case(const std::string& s) {
  for (auto c : {PrimeCase::MetacyclicSmall, PrimeCase::MetacyclicFull, PrimeCase::LinearSmall, PrimeCase::LinearFull})
    if (to_string(c) == s) return c;
  throw InvalidCase("unknown case " + s);
}

bool case_applies(unsigned long p, unsigned long a, PrimeCase c) {
  if (p < 3 || !is_prime_ul(p) || a == 0) return false;
  if (c == PrimeCase::MetacyclicSmall || c == PrimeCase::LinearSmall) return (p - 1) % a == 0;
  return true;
}

BoundVerdict thmA_case_check(unsigned long p, unsigned long a, unsigned long l, PrimeCase c) {
  if (p < 3 || !is_prime_ul(p)) throw InvalidCase(std::to_string(p) + " is not an odd prime");
  if (a == 0 || l < 1 || l > a) throw InvalidCase("need 1 <= l <= a");
  if (!case_applies(p, a, c)) throw InvalidCase("a does not divide p - 1");
  BoundVerdict v{case_label(p, a, l, c), {{"p", long(p)}, {"a", long(a)}, {"l", long(l)}}, 0, 0, false};
  switch (c) {
    case PrimeCase::MetacyclicSmall:
      v.lhs = pow2((p - 1) / a);
      v.rhs = big(p) * big(p) * big(p - 1);
      break;
    case PrimeCase::MetacyclicFull:
      v.lhs = pow2(p);
      v.rhs = big(a) * pow2(2 * p / 3) * big(p) * big(p - 1);
      break;
    case PrimeCase::LinearSmall:
      // (p-1)/a >= U  <=>  p-1 >= a U
      v.scale = "log2";
      v.lhs = big(p - 1);
      v.rhs = (Up(a) * (linear_case_log2_upper(p) + Up::log2_of(big(p)))).ceil();
      break;
    case PrimeCase::LinearFull:
      // p/3 >= U  <=>  p >= 3 U
      v.scale = "log2";
      v.lhs = big(p);
      v.rhs = (Up(3) * (linear_case_log2_upper(p) + Up::log2_of(big(a)))).ceil();
      break;
  }
  v.holds = v.lhs >= v.rhs;
  return v;
}

BoundVerdict mon_metacyclic_bound(unsigned long p, unsigned long l, unsigned long a) {
  if (a == 0 || (l * (p - 1)) % a != 0) throw InvalidCase("a does not divide l(p-1)");
  BoundVerdict v{"metacyclic symrank bound p=" + std::to_string(p) + " l=" + std::to_string(l) +
                     " a=" + std::to_string(a),
                 {{"p", long(p)}, {"l", long(l)}, {"a", long(a)}},
                 pow2(p),
                 pow2(l * (p - 1) / a + 1) * big(p) * big(p) * big(p - 1),
                 false};
  v.holds = v.lhs >= v.rhs;
  return v;
}

namespace {

std::vector<unsigned long> applicable_primes(unsigned long a, PrimeCase c, unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> out;
  for (unsigned long p = std::max(lo, 3UL); p <= hi; ++p)
    if (case_applies(p, a, c)) out.push_back(p);
  return out;
}

}  // namespace

std::vector<BoundVerdict> prime_case_scan(unsigned long a, unsigned long l, PrimeCase c, unsigned long lo,
                                          unsigned long hi) {
  const auto primes = applicable_primes(a, c, lo, hi);
  std::vector<BoundVerdict> out(primes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < primes.size(); ++i) out[i] = thmA_case_check(primes[i], a, l, c);
  return out;
}

std::vector<BoundVerdict> prime_case_scan_serial(unsigned long a, unsigned long l, PrimeCase c, unsigned long lo,
                                                 unsigned long hi) {
  std::vector<BoundVerdict> out;
  for (auto p : applicable_primes(a, c, lo, hi)) out.push_back(thmA_case_check(p, a, l, c));
  return out;
}

Threshold min_threshold(unsigned long a, PrimeCase c, unsigned long horizon, unsigned long l) {
  const auto scan = prime_case_scan(a, l, c, 3, horizon);
  if (scan.empty() || !scan.back().holds)
    throw HorizonTooSmall("no passing tail of primes up to " + std::to_string(horizon));
  std::size_t k = scan.size() - 1;
  while (k > 0 && scan[k - 1].holds) --k;
  Threshold t{static_cast<unsigned long>(scan[k].params.at("p")), horizon, scan.size(), {}};
  for (std::size_t i = 0; i < k; ++i)
    if (scan[i].holds) t.anomalies.push_back(static_cast<unsigned long>(scan[i].params.at("p")));
  return t;
}

std::vector<PrimeOfForm> prime_of_form(unsigned long q_max, unsigned long m_max) {
  std::vector<PrimeOfForm> out;
  for (unsigned long q = 2; q <= q_max; ++q) {
    if (!prime_power(big(q))) continue;
    for (unsigned long m = 2; m <= m_max; ++m) {
      const BigInt p = (pow_ui(big(q), m) - 1) / (q - 1);
      if (mpz_probab_prime_p(p.get_mpz_t(), 40) > 0) out.push_back({p, big(q), m});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<long>> read_tuples(const Json& j) {
  std::vector<std::vector<long>> out;
  for (const auto& e : j) {
    if (e.is_array()) out.push_back(e.get<std::vector<long>>());
    else out.push_back({e.get<long>()});
  }
  return out;
}

FamilyConstraints read_constraints(const Json& j) {
  FamilyConstraints c;
  if (j.is_null()) return c;
  for (const auto& [key, val] : j.items()) {
    if (key == "n_min") c.n_min = val.get<unsigned long>();
    else if (key == "n_max") c.n_max = val.get<unsigned long>();
    else if (key == "n_parity") c.n_parity = val.get<std::string>() == "odd" ? 1 : 0;
    else if (key == "q_parity") c.q_parity = val.get<std::string>() == "odd" ? 1 : 0;
    else if (key == "q_mod") c.q_mod = std::make_pair(val.at(0).get<unsigned long>(), val.at(1).get<unsigned long>());
    else if (key == "q_in") c.q_in = val.get<std::vector<unsigned long>>();
    else if (key == "q_not_in") c.q_not_in = val.get<std::vector<unsigned long>>();
    else if (key == "q_min") c.q_min = val.get<unsigned long>();
    else if (key == "q_divisible_by") c.q_divisible_by = val.get<unsigned long>();
    else if (key == "q_not_divisible_by") c.q_not_divisible_by = val.get<unsigned long>();
    else if (key == "q_formula") c.q_formula = val.get<std::string>();
    else throw FormatError("unknown constraint " + key);
  }
  return c;
}

std::optional<std::string> optional_string(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

bool q_allowed(const FamilyConstraints& c, unsigned long q) {
  if (q < c.q_min) return false;
  if (c.q_parity && static_cast<int>(q % 2) != *c.q_parity) return false;
  if (c.q_mod && q % c.q_mod->first != c.q_mod->second) return false;
  if (!c.q_in.empty() && std::find(c.q_in.begin(), c.q_in.end(), q) == c.q_in.end()) return false;
  if (std::find(c.q_not_in.begin(), c.q_not_in.end(), q) != c.q_not_in.end()) return false;
  if (c.q_divisible_by && q % *c.q_divisible_by != 0) return false;
  if (c.q_not_divisible_by && q % *c.q_not_divisible_by == 0) return false;
  return true;
}

bool uses(const FamilyRecord& f, const std::string& v) {
  return std::find(f.parameters.begin(), f.parameters.end(), v) != f.parameters.end();
}

BigInt positive_integer(const Rational& x, const std::string& what) {
  if (x.get_den() != 1 || x <= 0) throw UnknownFormula(what + " is not a positive integer");
  return x.get_num();
}

}  // namespace

SimpleGroupData simple_group_data_from_json(const Json& j) {
  try {
    SimpleGroupData d;
    d.version = j.value("version", "");
    for (const auto& fj : j.at("families")) {
      FamilyRecord f;
      f.name = fj.at("name").get<std::string>();
      f.parameters = fj.at("parameters").get<std::vector<std::string>>();
      for (const auto& p : f.parameters)
        if (p != "n" && p != "q") throw FormatError(f.name + ": parameter " + p + " is not n or q");
      f.constraints = read_constraints(fj.value("constraints", Json()));
      f.order_formula = optional_string(fj, "order_formula");
      f.aut_formula = optional_string(fj, "aut_formula");
      f.dim_bound_formula = fj.at("dim_bound_formula").get<std::string>();
      const std::string kind = fj.at("bound_kind").get<std::string>();
      if (kind != "p" && kind != "r") throw FormatError(f.name + ": bound_kind must be p or r");
      f.bound_kind = kind[0];
      f.source = fj.value("source", "");
      f.expected_remaining = read_tuples(fj.at("expected_remaining"));
      f.note = fj.value("note", "");
      // Resolve every formula up front.
      Formula{f.dim_bound_formula};
      if (f.order_formula) Formula{*f.order_formula};
      if (f.aut_formula) Formula{*f.aut_formula};
      if (f.constraints.q_formula) Formula{*f.constraints.q_formula};
      d.families.push_back(std::move(f));
    }
    for (const auto& sj : j.at("sporadics")) {
      SporadicRecord s;
      s.name = sj.at("name").get<std::string>();
      s.aut_order = bigint_from_json(sj.at("aut_order"));
      if (sj.contains("rdim") && !sj.at("rdim").is_null()) s.rdim = sj.at("rdim").get<unsigned long>();
      s.expected_fail = sj.at("expected_fail").get<bool>();
      d.sporadics.push_back(std::move(s));
    }
    if (j.contains("aut_checks"))
      for (const auto& cj : j.at("aut_checks")) {
        AutOrderCheck c;
        c.group = cj.at("group").get<std::string>();
        c.family = cj.at("family").get<std::string>();
        c.params = cj.at("params").get<std::map<std::string, long>>();
        c.aut_order = bigint_from_json(cj.at("aut_order"));
        c.out = cj.value("out", "");
        if (cj.contains("min_prime_dim") && !cj.at("min_prime_dim").is_null())
          c.min_prime_dim = cj.at("min_prime_dim").get<unsigned long>();
        d.aut_checks.push_back(std::move(c));
      }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("simple group data: ") + e.what());
  }
}

SimpleGroupData load_simple_group_data(const std::filesystem::path& path) {
  return simple_group_data_from_json(read_json_file(path));
}

ScanCaps parse_scan_caps(const std::string& s) {
  ScanCaps caps;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("caps entry without '=': " + item);
    const std::string key = item.substr(0, eq);
    unsigned long val;
    try {
      val = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("caps value is not a number: " + item);
    }
    if (key == "n") caps.n_max = val;
    else if (key == "q") caps.q_max = val;
    else throw InvalidArgument("unknown caps key " + key);
  }
  return caps;
}

AlmostSimpleInequalities almost_simple_inequalities(const std::optional<Rational>& dim_bound, const BigInt& aut) {
  AlmostSimpleInequalities r{false, pow2(29) >= 58 * aut};
  if (dim_bound) r.dimension = power_of_two_dominates(ceil_rational(*dim_bound), 2 * aut);
  return r;
}

std::vector<Bindings> family_points(const FamilyRecord& f, const ScanCaps& caps) {
  const auto& c = f.constraints;
  std::vector<std::optional<unsigned long>> ns;
  if (uses(f, "n")) {
    const unsigned long hi = std::min(caps.n_max, c.n_max.value_or(caps.n_max));
    for (unsigned long n = c.n_min; n <= hi; ++n)
      if (!c.n_parity || static_cast<int>(n % 2) == *c.n_parity) ns.push_back(n);
  } else {
    ns.push_back(std::nullopt);
  }
  std::vector<Bindings> out;
  for (const auto& n : ns) {
    Bindings base;
    if (n) base["n"] = Rational(BigInt(*n));
    std::vector<BigInt> qs;
    if (c.q_formula) {
      qs.push_back(positive_integer(Formula(*c.q_formula).evaluate(base), f.name + " q"));
    } else {
      for (unsigned long q = 2; q <= caps.q_max; ++q)
        if (q_allowed(c, q) && prime_power(big(q))) qs.push_back(big(q));
    }
    for (const auto& q : qs) {
      const auto pp = prime_power(q);
      if (!pp) throw UnknownFormula(f.name + ": q = " + q.get_str() + " is not a prime power");
      Bindings b = base;
      b["q"] = Rational(q);
      b["u"] = Rational(pp->prime);
      b["f"] = Rational(BigInt(pp->exponent));
      out.push_back(std::move(b));
    }
  }
  return out;
}

BigInt family_aut_order(const FamilyRecord& f, const Bindings& point) {
  if (!f.aut_formula) throw UnknownFormula(f.name + " has no automorphism group order formula");
  return positive_integer(Formula(*f.aut_formula).evaluate(point), f.name + " |Aut|");
}

BigInt family_order(const FamilyRecord& f, const Bindings& point) {
  if (!f.order_formula) throw UnknownFormula(f.name + " has no order formula");
  return positive_integer(Formula(*f.order_formula).evaluate(point), f.name + " order");
}

FamilyScan scan_family(const FamilyRecord& f, const ScanCaps& caps) {
  FamilyScan s;
  s.name = f.name;
  s.expected = f.expected_remaining;
  std::sort(s.expected.begin(), s.expected.end());
  if (!f.aut_formula) {
    s.status = "unscanned";
    return s;
  }
  s.status = "scanned";
  const auto points = family_points(f, caps);
  s.points = points.size();
  const Formula bound(f.dim_bound_formula);
  const Formula aut(*f.aut_formula);
  std::vector<std::optional<RemainingCase>> per(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational d = bound.evaluate(points[i]);
    const BigInt a = positive_integer(aut.evaluate(points[i]), f.name + " |Aut|");
    if (almost_simple_inequalities(d, a).any()) continue;
    RemainingCase rc{{}, ceil_rational(d), a};
    for (const auto& p : f.parameters) rc.params.push_back(points[i].at(p).get_num().get_si());
    per[i] = std::move(rc);
  }
  for (auto& r : per)
    if (r) s.remaining.push_back(std::move(*r));
  std::sort(s.remaining.begin(), s.remaining.end(),
            [](const RemainingCase& x, const RemainingCase& y) { return x.params < y.params; });
  std::vector<std::vector<long>> got;
  for (const auto& r : s.remaining) got.push_back(r.params);
  s.matches = got == s.expected;
  return s;
}

AlmostSimpleReport almost_simple_scan(const SimpleGroupData& data, const ScanCaps& caps) {
  AlmostSimpleReport r;
  r.families_match = true;
  for (const auto& f : data.families) {
    r.families.push_back(scan_family(f, caps));
    if (r.families.back().status == "scanned" && !r.families.back().matches) r.families_match = false;
  }
  r.sporadics_match = true;
  for (const auto& s : data.sporadics) {
    std::optional<Rational> d;
    if (s.rdim) d = Rational(BigInt(*s.rdim));
    SporadicScan ss{s.name, s.aut_order, s.rdim, almost_simple_inequalities(d, s.aut_order), s.expected_fail};
    if (!ss.inequalities.any()) r.sporadic_failures.push_back(s.name);
    if (ss.inequalities.any() == s.expected_fail) r.sporadics_match = false;
    r.sporadics.push_back(std::move(ss));
  }
  return r;
}

Json to_json(const BoundVerdict& v) {
  Json j;
  j["label"] = v.label;
  j["params"] = v.params;
  j["lhs"] = to_json(v.lhs);
  j["rhs"] = to_json(v.rhs);
  j["scale"] = v.scale;
  j["holds"] = v.holds;
  return j;
}

Json to_json(const AlmostSimpleReport& r) {
  Json j;
  j["families"] = Json::array();
  for (const auto& f : r.families) {
    Json fj;
    fj["name"] = f.name;
    fj["status"] = f.status;
    fj["points"] = f.points;
    fj["remaining"] = Json::array();
    for (const auto& rc : f.remaining)
      fj["remaining"].push_back({{"params", rc.params}, {"dim_bound", to_json(rc.dim_bound)},
                                 {"aut_order", to_json(rc.aut_order)}});
    fj["expected"] = f.expected;
    fj["match"] = f.matches;
    j["families"].push_back(fj);
  }
  j["sporadics"] = Json::array();
  for (const auto& s : r.sporadics) {
    Json sj;
    sj["name"] = s.name;
    sj["aut_order"] = to_json(s.aut_order);
    sj["rdim"] = s.rdim ? Json(*s.rdim) : Json();
    sj["dimension_inequality"] = s.inequalities.dimension;
    sj["inequality_29"] = s.inequalities.twenty_nine;
    sj["fails"] = !s.inequalities.any();
    sj["expected_fail"] = s.expected_fail;
    j["sporadics"].push_back(sj);
  }
  j["sporadic_failures"] = r.sporadic_failures;
  j["sporadics_match"] = r.sporadics_match;
  j["families_match"] = r.families_match;
  return j;
}

}  // namespace glat
