#include "glat/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "glat/errors.hpp"
#include "glat/kernels.hpp"

namespace glat {

namespace {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

void link(IntMatrix& c, std::size_t i, std::size_t j, long cij = -1, long cji = -1) {
  c(i, j) = cij;
  c(j, i) = cji;
}

// Weyl order of a connected Dynkin subdiagram given by its node set.
BigInt component_weyl_order(const IntMatrix& c, const std::vector<std::size_t>& nodes) {
  const std::size_t k = nodes.size();
  std::vector<int> degree(k, 0);
  int max_label = 1;
  std::size_t double_a = 0, double_b = 0;
  bool has_double = false;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y) continue;
      const BigInt prod = c(nodes[x], nodes[y]) * c(nodes[y], nodes[x]);
      if (prod == 0) continue;
      ++degree[x];
      const int label = static_cast<int>(prod.get_si());
      max_label = std::max(max_label, label);
      if (label == 2) has_double = true, double_a = x, double_b = y;
    }
  if (max_label == 3) return 12;
  if (has_double) {
    if (degree[double_a] > 1 && degree[double_b] > 1) return 1152;
    return pow2(k) * factorial(k);
  }
  auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) return factorial(k + 1);
  // Arm lengths from the branch node.
  const std::size_t b = static_cast<std::size_t>(branch - degree.begin());
  int unit_arms = 0;
  for (std::size_t y = 0; y < k; ++y) {
    if (y == b || c(nodes[b], nodes[y]) == 0) continue;
    int len = 1;
    std::size_t prev = b, cur = y;
    while (true) {
      std::size_t next = k;
      for (std::size_t z = 0; z < k; ++z)
        if (z != prev && z != cur && c(nodes[cur], nodes[z]) != 0) next = z;
      if (next == k) break;
      prev = cur, cur = next, ++len;
    }
    if (len == 1) ++unit_arms;
  }
  if (unit_arms >= 2) return pow2(k - 1) * factorial(k);
  if (k == 6) return 51840;
  if (k == 7) return 2903040;
  return 696729600;
}

IntMatrix reflection(const IntMatrix& cartan, std::size_t i) {
  const std::size_t n = cartan.rows();
  IntMatrix s = IntMatrix::identity(n);
  // sigma_i(v) = v - v_i alpha_i: column i becomes e_i - alpha_i.
  for (std::size_t r = 0; r < n; ++r) s(r, i) -= cartan(i, r);
  return s;
}

int coxeter_exponent(const BigInt& prod) {
  switch (prod.get_si()) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

IntMatrix matrix_power(const IntMatrix& m, int e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string RootSystemSpec::name() const {
  return std::string(1, family_letter(family)) + "_" + std::to_string(rank);
}

void validate(const RootSystemSpec& s) {
  const int n = s.rank;
  bool ok = false;
  switch (s.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 3; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidRank("rank " + std::to_string(n) + " is not valid for family " +
                             std::string(1, family_letter(s.family)));
}

RootSystemSpec parse_root_system(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty root system name");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits = text.substr(text.size() > 1 && text[1] == '_' ? 2 : 1);
  const auto pos = std::string("ABCDEFG").find(letter);
  if (pos == std::string::npos || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidArgument("cannot parse root system '" + text + "'");
  RootSystemSpec s{static_cast<Family>(pos), std::stoi(digits)};
  validate(s);
  return s;
}

IntMatrix cartan_matrix(const RootSystemSpec& spec) {
  validate(spec);
  const std::size_t n = static_cast<std::size_t>(spec.rank);
  IntMatrix c = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  switch (spec.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -2, -1);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 3 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 2);
      link(c, n - 3, n - 1);
      break;
    case Family::E:
      link(c, 0, 2);
      link(c, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::F:
      link(c, 0, 1);
      link(c, 1, 2, -2, -1);
      link(c, 2, 3);
      break;
    case Family::G:
      link(c, 0, 1, -1, -3);
      break;
  }
  return c;
}

BigInt weyl_group_order(const RootSystemSpec& spec) {
  validate(spec);
  const auto n = static_cast<unsigned long>(spec.rank);
  switch (spec.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return pow2(n) * factorial(n);
    case Family::D: return pow2(n - 1) * factorial(n);
    case Family::E: return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

MatGroup WeylModel::group() const {
  MatGroup g(rank(), simple_reflections);
  g.set_known_order(weyl_order);
  return g;
}

WeylModel build(const RootSystemSpec& spec) {
  WeylModel m{spec, cartan_matrix(spec), {}, weyl_group_order(spec)};
  const std::size_t n = m.rank();
  for (std::size_t i = 0; i < n; ++i) m.simple_reflections.push_back(reflection(m.cartan, i));
  for (std::size_t i = 0; i < n; ++i) {
    const IntMatrix& s = m.simple_reflections[i];
    if (!(s * s).is_identity()) throw Error("simple reflection is not an involution");
    if (s * m.fundamental_weight(i) != m.fundamental_weight(i) - m.simple_root(i))
      throw Error("simple reflection does not send lambda_i to lambda_i - alpha_i");
    for (std::size_t j = i + 1; j < n; ++j) {
      const int e = coxeter_exponent(m.cartan(i, j) * m.cartan(j, i));
      if (!matrix_power(s * m.simple_reflections[j], e).is_identity())
        throw Error("braid relation fails for " + spec.name());
    }
  }
  return m;
}

std::string LatticeKindSpec::name() const {
  switch (kind) {
    case LatticeKind::Weight: return "weight";
    case LatticeKind::Root: return "root";
    case LatticeKind::Intermediate: return "intermediate(" + std::to_string(d) + ")";
    case LatticeKind::IntermediateDPenultimate: return "intermediate_D(n-1)";
    case LatticeKind::IntermediateDLast: return "intermediate_D(n)";
  }
  return "";
}

LatticeKindSpec parse_lattice_kind(const std::string& text) {
  if (text == "weight") return {LatticeKind::Weight};
  if (text == "root") return {LatticeKind::Root};
  if (text == "intermediate_D(n-1)") return {LatticeKind::IntermediateDPenultimate};
  if (text == "intermediate_D(n)") return {LatticeKind::IntermediateDLast};
  const std::string prefix = "intermediate(";
  if (text.rfind(prefix, 0) == 0 && text.back() == ')')
    return {LatticeKind::Intermediate, std::stoi(text.substr(prefix.size(), text.size() - prefix.size() - 1))};
  throw InvalidArgument("unknown lattice kind '" + text + "'");
}

std::vector<LatticeKindSpec> available_kinds(const RootSystemSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  std::vector<LatticeKindSpec> out;
  switch (spec.family) {
    case Family::A:
      out.push_back({LatticeKind::Weight});
      for (int d = 2; d < n + 1; ++d)
        if ((n + 1) % d == 0) out.push_back({LatticeKind::Intermediate, d});
      out.push_back({LatticeKind::Root});
      break;
    case Family::B:
    case Family::C:
      out = {{LatticeKind::Weight}, {LatticeKind::Root}};
      break;
    case Family::D:
      if (n % 2 == 0)
        out = {{LatticeKind::Weight},
               {LatticeKind::IntermediateDPenultimate},
               {LatticeKind::IntermediateDLast},
               {LatticeKind::Root}};
      else
        out = {{LatticeKind::Weight}, {LatticeKind::Intermediate, 2}, {LatticeKind::Root}};
      break;
    case Family::E:
      if (n == 8)
        out = {{LatticeKind::Root}};
      else
        out = {{LatticeKind::Weight}, {LatticeKind::Root}};
      break;
    case Family::F:
    case Family::G:
      out = {{LatticeKind::Root}};
      break;
  }
  return out;
}

NamedLattice lattice(const WeylModel& model, const LatticeKindSpec& kind) {
  const auto kinds = available_kinds(model.spec);
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw KindUnavailable(kind.name() + " is not defined for " + model.spec.name());
  const std::size_t n = model.rank();
  const Family f = model.spec.family;
  const LatticeBasis root = hnf(model.cartan);

  auto weight_hint = [&](std::size_t i) {
    return std::pair{model.fundamental_weight(i - 1), "lambda_" + std::to_string(i)};
  };
  auto root_hint = [&](std::size_t i) {
    return std::pair{model.simple_root(i - 1), "alpha_" + std::to_string(i)};
  };

  NamedLattice out{kind, {}, {}, {}};
  std::pair<IntVector, std::string> hint;
  switch (kind.kind) {
    case LatticeKind::Weight:
      out.basis = LatticeBasis::full(n);
      if (f == Family::B || (f == Family::D && n % 2 == 1))
        hint = weight_hint(n);
      else if (f == Family::E && n == 7)
        hint = weight_hint(7);
      else
        hint = weight_hint(1);
      break;
    case LatticeKind::Root:
      out.basis = root;
      if (f == Family::B) {
        hint = root_hint(n);
      } else if (f == Family::F) {
        // Long roots of F_4 span a proper sublattice; use the first short simple root.
        const auto lengths = simple_root_lengths(model);
        hint = root_hint(static_cast<std::size_t>(std::find(lengths.begin(), lengths.end(), 1) - lengths.begin()) + 1);
      } else {
        hint = root_hint(1);
      }
      break;
    case LatticeKind::Intermediate: {
      const std::size_t i = f == Family::A ? static_cast<std::size_t>(kind.d) : 1;
      hint = weight_hint(i);
      out.basis = lattice_sum(root, hnf(std::vector<IntVector>{hint.first}, n));
      break;
    }
    case LatticeKind::IntermediateDPenultimate:
      hint = weight_hint(n - 1);
      out.basis = lattice_sum(root, hnf(std::vector<IntVector>{hint.first}, n));
      break;
    case LatticeKind::IntermediateDLast:
      hint = weight_hint(n);
      out.basis = lattice_sum(root, hnf(std::vector<IntVector>{hint.first}, n));
      break;
  }
  out.generator_hint = std::move(hint.first);
  out.generator_name = std::move(hint.second);
  return out;
}

IntVector dominant_representative(const WeylModel& model, const IntVector& v) {
  if (v.dim() != model.rank()) throw DimensionMismatch("weight dimension");
  IntVector w = v;
  BigInt steps = 0;
  while (true) {
    std::size_t neg = w.dim();
    for (std::size_t i = 0; i < w.dim(); ++i)
      if (sgn(w[i]) < 0) {
        neg = i;
        break;
      }
    if (neg == w.dim()) return w;
    const BigInt c = w[neg];
    w -= c * model.simple_root(neg);
    if (++steps > model.weyl_order) throw Error("dominance reduction did not terminate");
  }
}

BigInt parabolic_order(const WeylModel& model, const IntVector& dominant) {
  const std::size_t n = model.rank();
  std::vector<bool> in(n), seen(n, false);
  for (std::size_t i = 0; i < n; ++i) in[i] = sgn(dominant[i]) == 0;
  BigInt total = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (!in[s] || seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (std::size_t j = 0; j < n; ++j)
        if (in[j] && !seen[j] && model.cartan(comp[h], j) != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    total *= component_weyl_order(model.cartan, comp);
  }
  return total;
}

BigInt weyl_orbit_size(const WeylModel& model, const IntVector& v) {
  const IntVector dom = dominant_representative(model, v);
  const BigInt stab = parabolic_order(model, dom);
  if (!mpz_divisible_p(model.weyl_order.get_mpz_t(), stab.get_mpz_t()))
    throw Error("parabolic order does not divide the Weyl group order");
  return model.weyl_order / stab;
}

std::vector<int> simple_root_lengths(const WeylModel& model) {
  const std::size_t n = model.rank();
  // |alpha_i|^2 / |alpha_j|^2 = C_ij / C_ji along each edge; propagate from node 0.
  std::vector<mpq_class> len(n, 0);
  len[0] = 1;
  std::vector<std::size_t> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t i = queue[h];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && model.cartan(i, j) != 0 && len[j] == 0) {
        mpq_class ratio(model.cartan(j, i), model.cartan(i, j));
        ratio.canonicalize();
        len[j] = len[i] * ratio;
        queue.push_back(j);
      }
  }
  const mpq_class shortest = *std::min_element(len.begin(), len.end());
  std::vector<int> out;
  for (const auto& l : len) {
    mpq_class r = l / shortest;
    r.canonicalize();
    out.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return out;
}

BigInt short_root_count(const WeylModel& model) {
  const auto lens = simple_root_lengths(model);
  const std::size_t i = static_cast<std::size_t>(std::find(lens.begin(), lens.end(), 1) - lens.begin());
  return weyl_orbit_size(model, model.simple_root(i));
}

MatGroup root_coordinate_group(const WeylModel& model) {
  const std::size_t n = model.rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    // sigma_i(alpha_j) = alpha_j - C_ji alpha_i.
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= model.cartan(j, i);
    gens.push_back(std::move(s));
  }
  MatGroup g(n, std::move(gens));
  g.set_known_order(model.weyl_order);
  return g;
}

IntMatrix root_gram(const WeylModel& model) {
  const auto lens = simple_root_lengths(model);
  const std::size_t n = model.rank();
  IntMatrix g(n, n);
  // (alpha_i, alpha_j) = C_ij |alpha_j|^2 / 2 with short roots of norm 2.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = model.cartan(i, j) * lens[j];
  return g;
}

bool root_lattice_member_via_smith(const WeylModel& model, const IntVector& v) {
  const SmithDecomposition s = snf(model.cartan.transpose());
  const IntVector pv = s.P * v;
  for (std::size_t i = 0; i < pv.dim(); ++i) {
    const BigInt& d = s.D(i, i);
    if (sgn(d) == 0) {
      if (sgn(pv[i]) != 0) return false;
    } else if (!mpz_divisible_p(pv[i].get_mpz_t(), d.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

std::vector<SymrankTableRow> root_system_symrank_table(int max_rank, int bd_max_rank,
                                                       int enumeration_max_rank) {
  std::vector<RootSystemSpec> specs;
  const int bd = std::max(max_rank, bd_max_rank);
  for (int n = 1; n <= max_rank; ++n) specs.push_back({Family::A, n});
  for (int n = 2; n <= bd; ++n) specs.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) specs.push_back({Family::C, n});
  for (int n = 4; n <= bd; ++n) specs.push_back({Family::D, n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) specs.push_back({Family::E, n});
  if (max_rank >= 4) specs.push_back({Family::F, 4});
  if (max_rank >= 2) specs.push_back({Family::G, 2});

  struct Job {
    RootSystemSpec spec;
    LatticeKindSpec kind;
  };
  std::vector<Job> jobs;
  for (const auto& s : specs)
    for (const auto& k : available_kinds(s)) jobs.push_back({s, k});

  std::vector<SymrankTableRow> rows(jobs.size());
  // Rows are independent; the order of `rows` is fixed by `jobs`.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const WeylModel model = build(jobs[j].spec);
    const NamedLattice lat = lattice(model, jobs[j].kind);
    SymrankTableRow row{jobs[j].spec, jobs[j].kind, lat.generator_name, 0, false, "", 0};
    row.formula_check = weyl_orbit_size(model, lat.generator_hint);
    if (jobs[j].spec.rank <= enumeration_max_rank) {
      const auto orb = kernels::orbit_serial(model.simple_reflections, lat.generator_hint, kDefaultCap);
      row.symrank = static_cast<unsigned long>(orb.size());
      row.span_matches = hnf(orb, model.rank()) == lat.basis;
      row.method = "orbit";
    } else {
      row.symrank = row.formula_check;
      const LatticeBasis start = hnf(std::vector<IntVector>{lat.generator_hint}, model.rank());
      row.span_matches = stable_span(model.group(), start) == lat.basis;
      row.method = "stabilizer";
    }
    rows[j] = std::move(row);
  }
  return rows;
}

RdimBound rdim_lower_bound(int n) {
  if (n < 1) throw InvalidArgument("rdim bound needs n >= 1");
  const LatticeKindSpec root{LatticeKind::Root};
  RdimBound out{n, 0, {Family::B, n}, {LatticeKind::Weight}};
  switch (n) {
    case 1: out.witness_system = {Family::A, 1}, out.witness_lattice = root; break;
    case 2: out.witness_system = {Family::G, 2}, out.witness_lattice = root; break;
    case 3: out.witness_system = {Family::A, 3}, out.witness_lattice = root; break;
    case 4: out.witness_system = {Family::C, 4}, out.witness_lattice = root; break;
    case 5: out.witness_system = {Family::D, 5}, out.witness_lattice = root; break;
    case 6: out.witness_system = {Family::E, 6}, out.witness_lattice = root; break;
    default: break;
  }
  const WeylModel model = build(out.witness_system);
  out.value = weyl_orbit_size(model, lattice(model, out.witness_lattice).generator_hint);
  return out;
}

}  // namespace glat
