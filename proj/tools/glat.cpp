#include <CLI11.hpp>

#include <iostream>

#include "glat/commands.hpp"

using namespace glat;

namespace {

ScanCaps caps_or_default(const std::string& s) { return s.empty() ? ScanCaps{} : parse_scan_caps(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for finite linear groups and their lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  std::size_t cap = kDefaultCap;
  std::optional<std::string> data_flag;
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--cap", cap, "Enumeration cap");
  app.add_option("--data", data_flag, "Data directory (else $SYMRANK_DATA_DIR, else the built-in one)");

  std::function<RunReport()> run;

  auto* rs = app.add_subcommand("rootsys", "Symmetric ranks of root-system lattices against the fixture");
  int max_rank = 8, bd_max_rank = 0;
  rs->add_option("--max-rank", max_rank)->check(CLI::PositiveNumber);
  rs->add_option("--bd-max-rank", bd_max_rank, "B_n and D_n rows up to this rank (default --max-rank)");
  rs->callback([&] { run = [&] { return cmd_rootsys_table(max_rank, bd_max_rank, resolve_data_dir(data_flag)); }; });

  auto* rd = app.add_subcommand("rdim", "Lower bounds for rdim(n)");
  int max_n = 10;
  rd->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  rd->callback([&] { run = [&] { return cmd_rdim_table(max_n, resolve_data_dir(data_flag)); }; });

  auto* th = app.add_subcommand("theta", "Theta-series prefix of a Gram matrix");
  std::string gram;
  unsigned long horizon = 10;
  bool diagonal = false;
  th->add_option("--gram", gram)->required()->check(CLI::ExistingFile);
  th->add_option("--horizon", horizon);
  th->add_flag("--diagonal", diagonal, "Sum theta coefficients at the diagonal norms");
  th->callback([&] { run = [&] { return cmd_theta(gram, horizon, diagonal, cap); }; });

  auto* gf = app.add_subcommand("gf2", "Cyclotomic factors of x^p + 1 over F_2");
  gf->require_subcommand(1);
  unsigned long gp = 7;
  auto* gfa = gf->add_subcommand("factor-xp1");
  gfa->add_option("--p", gp)->required();
  gfa->callback([&] { run = [&] { return cmd_gf2_factor(gp); }; });
  auto* gfs = gf->add_subcommand("subspaces");
  gfs->add_option("--p", gp)->required();
  gfs->callback([&] { run = [&] { return cmd_gf2_subspaces(gp); }; });

  auto* mo = app.add_subcommand("monomial", "Monomial groups with a p-cycle");
  mo->require_subcommand(1);
  unsigned long mp = 7;
  auto* moc = mo->add_subcommand("classify");
  moc->add_option("--p", mp)->required();
  moc->callback([&] { run = [&] { return cmd_monomial_classify(mp); }; });

  auto* sy = app.add_subcommand("symrank", "Symmetric rank of a stable lattice");
  std::string group_file, mode = "exact";
  std::optional<std::string> lattice_file;
  unsigned long radius = 2;
  sy->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  sy->add_option("--lattice", lattice_file)->check(CLI::ExistingFile);
  sy->add_option("--radius", radius);
  sy->add_option("--mode", mode, "exact, orbit:v1,...,vn or diagonal-theta");
  sy->callback([&] {
    run = [&] {
      std::optional<std::filesystem::path> lf;
      if (lattice_file) lf = *lattice_file;
      return cmd_symrank(group_file, lf, radius, mode, cap);
    };
  });

  auto* bo = app.add_subcommand("bounds", "Inequalities for primes and almost simple groups");
  bo->require_subcommand(1);
  unsigned long ba = 2, bh = 10007, bl = 1;
  std::optional<std::string> bcase;
  auto* bop = bo->add_subcommand("prime");
  bop->add_option("--a", ba)->required()->check(CLI::PositiveNumber);
  bop->add_option("--case", bcase)->check(CLI::IsMember({"II.i", "II.ii", "III.i", "III.ii"}));
  bop->add_option("--horizon", bh);
  bop->add_option("--l", bl)->check(CLI::PositiveNumber);
  bop->callback([&] { run = [&] { return cmd_bounds_prime(ba, bcase, bh, bl); }; });
  std::optional<std::string> as_data;
  std::string as_caps;
  auto* boa = bo->add_subcommand("almost-simple");
  boa->add_option("--data", as_data, "Simple-group JSON file (default <data>/simple_groups.json)");
  boa->add_option("--caps", as_caps, "n=N,q=Q");
  boa->callback([&] {
    run = [&] {
      const std::filesystem::path f = as_data ? std::filesystem::path(*as_data)
                                              : resolve_data_dir(data_flag) / "simple_groups.json";
      return cmd_bounds_almost_simple(f, caps_or_default(as_caps));
    };
  });
  unsigned long qmax = 100, mmax = 8;
  auto* bof = bo->add_subcommand("prime-of-form");
  bof->add_option("--qmax", qmax)->required();
  bof->add_option("--mmax", mmax)->required();
  bof->callback([&] { run = [&] { return cmd_bounds_prime_of_form(qmax, mmax); }; });

  auto* ve = app.add_subcommand("verify", "Re-check a published result");
  std::string vname;
  std::optional<std::string> imf;
  ve->add_option("name", vname)->required()->check(CLI::IsMember({"low-dims", "prop515", "thmA", "thmA2", "almost-simple"}));
  ve->add_option("--imf", imf, "Directory of i.m.f. group files for low-dims (default <data>/imf)");
  ve->callback([&] {
    run = [&] {
      std::optional<std::filesystem::path> dir;
      if (imf) dir = *imf;
      return cmd_verify(vname, resolve_data_dir(data_flag), cap, dir);
    };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    const RunReport r = run();
    std::cout << render(r, parse_format(format));
    return r.exit_code;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const MissingExternalData& e) {
    std::cerr << "missing external data: " << e.what() << "\n";
    return kExitMissingData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
