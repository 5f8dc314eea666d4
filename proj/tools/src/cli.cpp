#include "heckeforge_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "heckeforge/bernstein.hpp"
#include "heckeforge/central_map.hpp"
#include "heckeforge/dual_weights.hpp"
#include "heckeforge/error.hpp"
#include "heckeforge/parahoric.hpp"
#include "heckeforge/serialize.hpp"
#include "heckeforge_cli/parse.hpp"

namespace heckeforge::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;
namespace hj = heckeforge::json;

struct Options {
  std::string group = "SL2";
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
};

struct Result {
  Json data;
  std::string text;
  bool failed = false;
};

// Thrown for bad command-line values that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootDatumPtr load_group(const std::string& name) {
  if (name.ends_with(".json") || fs::is_regular_file(name)) {
    std::ifstream in(name);
    if (!in) throw UsageError("cannot open root datum file " + name);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("root datum file: ") + e.what());
    }
    return RootDatum::build(hj::root_datum_spec(j));
  }
  return preset(name);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

std::string render(const HeckeElement& h) {
  if (h.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [x, c] : h.sorted_terms()) os << "T[" << h.group()->format(x) << "]\t" << c << "\n";
  return os.str();
}

std::string render(const CenterExpansion& e, const char* name) {
  std::ostringstream os;
  for (const auto& [mu, c] : e) os << name << "[" << mu.to_string() << "]\t" << c << "\n";
  return os.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// Operand of `hecke mul`: an element spelling or a Hecke JSON file.
HeckeElement hecke_operand(const AffineWeylPtr& g, const std::string& arg) {
  if (arg.ends_with(".json") && fs::is_regular_file(arg)) return hj::hecke(g, read_json_file(arg));
  return HeckeElement::basis(g, parse_element(*g, arg));
}

Result cmd_rootdatum_show(const AffineWeylPtr& g) {
  const RootDatum& rd = g->root_datum();
  Result r;
  Json roots = Json::array();
  for (const auto& p : rd.positive_roots()) roots.push_back({{"root", p.root}, {"coroot", p.coroot.to_vector()}});
  Json gens = Json::array();
  for (int s = 0; s < g->num_generators(); ++s) gens.push_back({{"label", s}, {"elt", hj::element(*g, g->generator(s))}});
  r.data = hj::root_datum(rd);
  r.data["weyl_order"] = rd.weyl_order();
  r.data["positive_roots"] = roots;
  r.data["semisimple"] = rd.is_semisimple();
  r.data["affine_generators"] = gens;
  std::ostringstream os;
  os << rd.name() << ": rank " << rd.rank() << ", |W0| = " << rd.weyl_order() << ", " << rd.positive_roots().size()
     << " positive roots" << (rd.is_semisimple() ? "" : ", not semisimple") << "\n";
  for (const auto& p : rd.positive_roots()) {
    os << "  root";
    for (int v : p.root) os << ' ' << v;
    os << "\tcoroot " << p.coroot << "\n";
  }
  for (int s = 0; s < g->num_generators(); ++s) os << "  s" << s << " = " << g->format(g->generator(s)) << "\n";
  r.text = os.str();
  return r;
}

Result cmd_weyl_enumerate(const AffineWeylPtr& g, int max_len) {
  Result r;
  const auto elts = g->enumerate(max_len);
  Json list = Json::array();
  std::ostringstream os;
  for (const auto& x : elts) {
    list.push_back({{"elt", hj::element(*g, x)}, {"length", g->length(x)}});
    os << g->length(x) << "\t" << g->format(x) << "\n";
  }
  const bool truncated = g->omega_elements().truncated;
  r.data = {{"max_len", max_len}, {"count", elts.size()}, {"omega_truncated", truncated}, {"elements", list}};
  r.text = os.str() + std::to_string(elts.size()) + " elements" + (truncated ? " (Omega truncated to a box)" : "") + "\n";
  return r;
}

Result cmd_length(const AffineWeylPtr& g, const std::string& arg) {
  const ExtAffineElement x = parse_element(*g, arg);
  const ReducedWord rw = g->reduced_word(x);
  Result r;
  r.data = {{"elt", hj::element(*g, x)},
            {"length", g->length(x)},
            {"reduced_word", rw.indices},
            {"omega", hj::element(*g, rw.omega)}};
  std::ostringstream os;
  os << g->format(x) << "\tlength " << g->length(x) << "\tword";
  for (int s : rw.indices) os << " s" << s;
  os << "\tomega " << g->format(rw.omega) << "\n";
  r.text = os.str();
  return r;
}

Result cmd_bruhat(const AffineWeylPtr& g, const std::string& a, const std::string& b) {
  const ExtAffineElement v = parse_element(*g, a);
  const ExtAffineElement w = parse_element(*g, b);
  const bool leq = g->bruhat_leq(v, w);
  Result r;
  r.data = {{"v", hj::element(*g, v)}, {"w", hj::element(*g, w)}, {"leq", leq}};
  r.text = g->format(v) + (leq ? " <= " : " !<= ") + g->format(w) + "\n";
  return r;
}

Result cmd_adm(const AffineWeylPtr& g, const std::string& mu_text, const std::string& facet_text) {
  const RootDatum& rd = g->root_datum();
  const Cocharacter mu = parse_cocharacter(rd, mu_text);
  if (!rd.is_dominant(mu)) throw UsageError(mu.to_string() + " is not dominant");
  Result r;
  std::ostringstream os;
  Json list = Json::array();
  if (facet_text.empty()) {
    for (const auto& x : g->admissible_set(mu)) {
      list.push_back(hj::element(*g, x));
      os << g->length(x) << "\t" << g->format(x) << "\n";
    }
  } else {
    const Facet f = parse_facet(*g, facet_text);
    for (const auto& dc : g->admissible_set(mu, f)) {
      list.push_back(hj::element(*g, dc.min_rep));
      os << dc.length << "\t" << g->format(dc.min_rep) << "\t(" << dc.elements.size() << " elements)\n";
    }
    r.data["facet"] = hj::facet(f);
  }
  r.data["mu"] = mu.to_vector();
  r.data["count"] = list.size();
  r.data["elements"] = list;
  r.text = os.str() + std::to_string(list.size()) + " elements\n";
  return r;
}

Result cmd_hecke_mul(const AffineWeylPtr& g, const std::string& a, const std::string& b) {
  const HeckeElement p = h_mul(hecke_operand(g, a), hecke_operand(g, b));
  return {hj::hecke(p), render(p)};
}

Result cmd_hecke_theta(const AffineWeylPtr& g, const std::string& lam_text, const std::string& borel) {
  if (borel != "standard" && borel != "opposite") throw UsageError("--borel must be standard or opposite");
  const Bernstein b(g, borel == "standard" ? Borel::Standard : Borel::Opposite);
  const Cocharacter lam = parse_cocharacter(g->root_datum(), lam_text);
  const HeckeElement& h = b.theta(lam);
  Result r{hj::hecke(h), render(h)};
  r.data["lam"] = lam.to_vector();
  r.data["borel"] = borel;
  return r;
}

Result cmd_hecke_center(const AffineWeylPtr& g, const std::string& mu_text) {
  const Cocharacter mu = parse_cocharacter(g->root_datum(), mu_text);
  if (!g->root_datum().is_dominant(mu)) throw UsageError(mu.to_string() + " is not dominant");
  const HeckeElement h = Bernstein(g).z(mu);
  Result r{hj::hecke(h), render(h)};
  r.data["mu"] = mu.to_vector();
  r.data["central"] = is_central(h);
  return r;
}

std::string cache_file(const AffineWeylPtr& g, const Facet& f, int max_len) {
  const char* dir = std::getenv("HECKEFORGE_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::string name = g->root_datum().name() + "-f";
  for (int s : f.gens) name += std::to_string(s) + "_";
  name += "-L" + std::to_string(max_len) + ".json";
  return (fs::path(dir) / name).string();
}

Result cmd_parahoric_table(const AffineWeylPtr& g, const std::string& facet_text, int max_len, std::ostream& err) {
  const ParahoricAlgebra alg(g, parse_facet(*g, facet_text));
  const std::string cache = cache_file(g, alg.facet(), max_len);
  std::vector<StructureEntry> entries;
  bool loaded = false;
  if (!cache.empty() && fs::is_regular_file(cache)) {
    try {
      entries = hj::structure_table(alg, read_json_file(cache));
      loaded = true;
    } catch (const Error& e) {
      err << "ignoring unreadable cache " << cache << ": " << e.what() << "\n";
    }
  }
  if (!loaded) {
    entries = alg.structure_table(max_len);
    if (!cache.empty()) {
      fs::create_directories(fs::path(cache).parent_path());
      std::ofstream(cache) << hj::structure_table(alg, entries).dump() << "\n";
    }
  }
  Result r;
  r.data = hj::structure_table(alg, entries);
  std::ostringstream os;
  os << "P_f = " << alg.poincare() << "\n";
  for (const auto& e : entries) {
    os << g->format(e.left.min_rep) << " * " << g->format(e.right.min_rep) << " =";
    bool first = true;
    for (const auto& [dc, c] : e.expansion) {
      os << (first ? " " : " + ") << "(" << c << ") m[" << g->format(dc.min_rep) << "]";
      first = false;
    }
    os << (first ? " 0\n" : "\n");
  }
  r.text = os.str();
  return r;
}

Result cmd_central_zmu(const AffineWeylPtr& g, const std::string& mu_text) {
  const CentralMap cm(g);
  const Cocharacter mu = parse_cocharacter(g->root_datum(), mu_text);
  if (!g->root_datum().is_dominant(mu)) throw UsageError(mu.to_string() + " is not dominant");
  const HeckeElement& h = cm.central_ic_class(mu);
  const CenterExpansion e = cm.expand_in_z_basis(h);
  Result r;
  r.data = {{"mu", mu.to_vector()}, {"element", hj::hecke(h)}, {"z_expansion", hj::expansion(e)}};
  r.text = render(h) + "in the z basis:\n" + render(e, "z");
  return r;
}

Result cmd_central_verify(const AffineWeylPtr& g, int bound) {
  const VerifyReport rep = CentralMap(g).verify(bound);
  Result r;
  r.data = hj::report(rep);
  r.failed = !rep.pass;
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << "Z[" << c.mu.to_string() << "]\tcentral " << yes(c.central) << "\tunitriangular " << yes(c.unitriangular)
       << "\tintegral " << yes(c.integral) << "\tcharacter " << yes(c.character) << "\n";
  }
  for (const auto& p : rep.products) {
    os << "Z[" << p.mu.to_string() << "] Z[" << p.mu2.to_string() << "]\tcommute " << yes(p.commute)
       << "\tintegral " << yes(p.integral) << "\ttensor " << yes(p.tensor) << "\n";
  }
  os << rep.group << " bound " << rep.bound << ": " << (rep.pass ? "pass" : "FAIL " + rep.counterexample) << "\n";
  r.text = os.str();
  return r;
}

Result cmd_dual_weights(const AffineWeylPtr& g, const std::string& mu_text) {
  const RootDatum& rd = g->root_datum();
  const Cocharacter mu = parse_cocharacter(rd, mu_text);
  if (!rd.is_dominant(mu)) throw UsageError(mu.to_string() + " is not dominant");
  const Character ch = weight_multiplicities(rd, mu);
  Result r{hj::character(ch), {}};
  r.data["dimension"] = hj::multiplicities({{mu, ch.dimension()}})[0]["m"];
  std::ostringstream os;
  for (const auto& [nu, m] : ch.mults) os << nu.to_string() << "\t" << m << "\n";
  os << "dimension " << ch.dimension() << "\n";
  r.text = os.str();
  return r;
}

Result cmd_dual_tensor(const AffineWeylPtr& g, const std::string& a, const std::string& b) {
  const RootDatum& rd = g->root_datum();
  const Cocharacter mu = parse_cocharacter(rd, a);
  const Cocharacter mu2 = parse_cocharacter(rd, b);
  if (!rd.is_dominant(mu) || !rd.is_dominant(mu2)) throw UsageError("highest weights must be dominant");
  const auto m = tensor_multiplicities(rd, mu, mu2);
  Result r;
  r.data = {{"mu", mu.to_vector()}, {"mu2", mu2.to_vector()}, {"multiplicities", hj::multiplicities(m)}};
  std::ostringstream os;
  for (const auto& [nu, c] : m) os << "V(" << nu.to_string() << ")\t" << c << "\n";
  r.text = os.str();
  return r;
}

Result cmd_specialize(const AffineWeylPtr& g, long q0, const std::string& file) {
  const HeckeElement h = hj::hecke(g, read_json_file(file));
  const SpecializedHeckeElement s = h_specialize(h, Integer(static_cast<std::int64_t>(q0)));
  Result r;
  Json terms = Json::array();
  std::ostringstream os;
  for (const auto& [x, c] : s.sorted_terms()) {
    terms.push_back({{"elt", hj::element(*g, x)}, {"coeff", c.to_string()}});
    os << "T[" << g->format(x) << "]\t" << c << "\n";
  }
  r.data = {{"q", q0}, {"terms", terms}};
  r.text = os.str();
  return r;
}

Result cmd_check_presentation(const AffineWeylPtr& g, int samples, int max_len, std::uint64_t seed) {
  const AffineWeylGroup& w = *g;
  bool quadratic = true;
  bool braid = true;
  bool associative = true;
  std::string counterexample;
  for (int s = 0; s < w.num_generators(); ++s) {
    const HeckeElement ts = HeckeElement::basis(g, w.generator(s));
    HeckeElement expect = HeckeElement::unit(g).scaled(LaurentPoly::q());
    expect.add_scaled(ts, LaurentPoly::q() - LaurentPoly(1));
    if (!(h_mul(ts, ts) == expect) && quadratic) {
      quadratic = false;
      counterexample = "quadratic relation at s" + std::to_string(s);
    }
  }
  for (int s = 0; s < w.num_generators(); ++s) {
    for (int t = s + 1; t < w.num_generators(); ++t) {
      // Order of s t, when finite.
      const ExtAffineElement st = w.multiply(w.generator(s), w.generator(t));
      ExtAffineElement p = st;
      int m = 1;
      while (!(p == w.identity()) && m <= 12) {
        p = w.multiply(p, st);
        ++m;
      }
      if (m > 12) continue;
      HeckeElement lhs = HeckeElement::unit(g);
      HeckeElement rhs = HeckeElement::unit(g);
      for (int k = 0; k < m; ++k) {
        lhs = lhs.right_mul_generator(k % 2 == 0 ? s : t);
        rhs = rhs.right_mul_generator(k % 2 == 0 ? t : s);
      }
      if (!(lhs == rhs) && braid) {
        braid = false;
        counterexample = "braid relation for s" + std::to_string(s) + ", s" + std::to_string(t);
      }
    }
  }
  const auto pool = w.enumerate(max_len);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < samples && associative; ++i) {
    const auto a = HeckeElement::basis(g, pool[pick(rng)]);
    const auto b = HeckeElement::basis(g, pool[pick(rng)]);
    const auto c = HeckeElement::basis(g, pool[pick(rng)]);
    if (!(h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c)))) {
      associative = false;
      counterexample = "associativity at " + w.format(a.terms().begin()->first) + ", " +
                       w.format(b.terms().begin()->first) + ", " + w.format(c.terms().begin()->first);
    }
  }
  Result r;
  const bool pass = quadratic && braid && associative;
  r.data = {{"group", w.root_datum().name()}, {"quadratic", quadratic}, {"braid", braid},
            {"associative", associative},     {"samples", samples},     {"seed", seed},
            {"pass", pass}};
  if (!pass) r.data["counterexample"] = counterexample;
  r.failed = !pass;
  r.text = "quadratic " + yes(quadratic) + "\nbraid " + yes(braid) + "\nassociative " + yes(associative) + " (" +
           std::to_string(samples) + " triples)\n" + (pass ? "pass\n" : "FAIL " + counterexample + "\n");
  return r;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownPreset:
    case ErrorKind::RankMismatch:
    case ErrorKind::NotGCM:
    case ErrorKind::NotFiniteType:
    case ErrorKind::InfiniteParabolic:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Iwahori, parahoric and spherical Hecke algebra computations", "heckeforge"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--group,-g", opt.group, "preset (SL2 PGL2 GL2 SL3 PGL3 Sp4 SO5 G2) or root datum JSON file");
  app.add_option("--format,-f", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", opt.output, "write to this file instead of stdout");
  app.add_option("--seed", opt.seed, "seed for randomized checks");

  std::function<Result(const AffineWeylPtr&)> action;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto branch = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->require_subcommand(1);
    return sub;
  };

  std::string a;
  std::string b;
  std::string facet_text;
  std::string borel = "standard";
  int max_len = 4;
  int bound = 8;
  int samples = 100;
  long q0 = 2;

  CLI::App* rootdatum = branch("rootdatum", "root datum data");
  leaf(rootdatum, "show", "roots, coroots, W0 and affine generators")->callback([&] {
    action = [](const AffineWeylPtr& g) { return cmd_rootdatum_show(g); };
  });

  CLI::App* weyl = branch("weyl", "extended affine Weyl group");
  CLI::App* weyl_enum = leaf(weyl, "enumerate", "all elements up to a length");
  weyl_enum->add_option("--max-len", max_len)->check(CLI::NonNegativeNumber);
  weyl_enum->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_weyl_enumerate(g, max_len); }; });

  CLI::App* length = leaf(&app, "length", "length and reduced word of an element");
  length->add_option("ELT", a)->required();
  length->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_length(g, a); }; });

  CLI::App* bruhat = leaf(&app, "bruhat", "Bruhat comparison V <= W");
  bruhat->add_option("V", a)->required();
  bruhat->add_option("W", b)->required();
  bruhat->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_bruhat(g, a, b); }; });

  CLI::App* adm = leaf(&app, "adm", "mu-admissible set");
  adm->add_option("MU", a)->required();
  adm->add_option("--facet", facet_text);
  adm->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_adm(g, a, facet_text); }; });

  CLI::App* hecke = branch("hecke", "Iwahori-Hecke algebra");
  CLI::App* mul = leaf(hecke, "mul", "product of two elements (spellings or Hecke JSON files)");
  mul->add_option("A", a)->required();
  mul->add_option("B", b)->required();
  mul->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_hecke_mul(g, a, b); }; });
  CLI::App* theta = leaf(hecke, "theta", "Bernstein element");
  theta->add_option("LAM", a)->required();
  theta->add_option("--borel", borel)->check(CLI::IsMember({"standard", "opposite"}));
  theta->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_hecke_theta(g, a, borel); }; });
  CLI::App* center = leaf(hecke, "center", "orbit sum z_mu");
  center->add_option("MU", a)->required();
  center->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_hecke_center(g, a); }; });

  CLI::App* parahoric = branch("parahoric", "parahoric Hecke algebras");
  CLI::App* table = leaf(parahoric, "table", "structure constants m_C * m_D");
  table->add_option("--facet", facet_text)->required();
  table->add_option("--max-len", max_len)->check(CLI::NonNegativeNumber);
  table->callback([&] {
    action = [&](const AffineWeylPtr& g) { return cmd_parahoric_table(g, facet_text, max_len, err); };
  });

  CLI::App* central = branch("central", "central elements and the Bernstein isomorphism");
  CLI::App* zmu = leaf(central, "zmu", "Z_mu and its z-basis expansion");
  zmu->add_option("MU", a)->required();
  zmu->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_central_zmu(g, a); }; });
  CLI::App* verify = leaf(central, "verify", "check the isomorphism up to a length bound");
  verify->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
  verify->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_central_verify(g, bound); }; });

  CLI::App* dual = branch("dual", "representations of the dual group");
  CLI::App* weights = leaf(dual, "weights", "weight multiplicities of V(MU)");
  weights->add_option("MU", a)->required();
  weights->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_dual_weights(g, a); }; });
  CLI::App* tensor = leaf(dual, "tensor", "decomposition of V(MU) x V(MU2)");
  tensor->add_option("MU", a)->required();
  tensor->add_option("MU2", b)->required();
  tensor->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_dual_tensor(g, a, b); }; });

  CLI::App* specialize = leaf(&app, "specialize", "evaluate a Hecke JSON file at q = Q");
  specialize->add_option("--q", q0)->required();
  specialize->add_option("FILE", a)->required()->check(CLI::ExistingFile);
  specialize->callback([&] { action = [&](const AffineWeylPtr& g) { return cmd_specialize(g, q0, a); }; });

  CLI::App* check = branch("check", "randomized property checks");
  CLI::App* presentation = leaf(check, "presentation", "quadratic, braid and associativity relations");
  presentation->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  presentation->add_option("--max-len", max_len)->check(CLI::NonNegativeNumber);
  presentation->callback([&] {
    action = [&](const AffineWeylPtr& g) { return cmd_check_presentation(g, samples, max_len, opt.seed); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool as_json = opt.format == "json";
  Result result;
  try {
    const AffineWeylPtr g = AffineWeylGroup::create(load_group(opt.group));
    result = action(g);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (code == 2) {
      err << "error: " << e.what() << "\n";
      return code;
    }
    result.failed = true;
    result.data = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    result.text = std::string("FAIL ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string body = as_json ? result.data.dump(2) + "\n" : result.text;
  if (opt.output.empty()) {
    out << body;
  } else {
    std::ofstream file(opt.output);
    if (!file) {
      err << "error: cannot write " << opt.output << "\n";
      return 2;
    }
    file << body;
  }
  return result.failed ? 1 : 0;
}

}  // namespace heckeforge::cli
