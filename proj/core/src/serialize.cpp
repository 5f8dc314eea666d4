#include "heckeforge/serialize.hpp"

#include <charconv>

#include "heckeforge/error.hpp"

namespace heckeforge::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Integer integer(const json& j) {
  try {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(std::string_view(j.get_ref<const std::string&>()));
  } catch (const std::invalid_argument&) {
  }
  bad("expected an integer or a decimal string");
}

json integer(const Integer& v) {
  if (v.is_small()) return v.to_int64();
  return v.to_string();
}

}  // namespace

json cocharacter(const Cocharacter& c) { return c.to_vector(); }

Cocharacter cocharacter(const json& j, int rank) {
  std::vector<int> v = int_list(j, "cocharacter");
  if (static_cast<int>(v.size()) != rank) bad("cocharacter has the wrong rank");
  return Cocharacter(v);
}

json poly(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.to_string();
  return j;
}

LaurentPoly poly(const json& j) {
  if (!j.is_object()) bad("polynomial must be an object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc() || ptr != key.data() + key.size()) bad("bad exponent \"" + key + "\"");
    terms.emplace_back(e, integer(value));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json element(const AffineWeylGroup& g, const ExtAffineElement& x) {
  std::vector<int> word;
  for (int i : g.root_datum().word(x.w)) word.push_back(i + 1);
  return {{"lam", cocharacter(x.lam)}, {"w", word}};
}

ExtAffineElement element(const AffineWeylGroup& g, const json& j) {
  const RootDatum& rd = g.root_datum();
  Cocharacter lam = cocharacter(field(j, "lam"), rd.rank());
  std::vector<int> word = int_list(field(j, "w"), "w");
  for (int& i : word) {
    if (i < 1 || i > rd.num_simple()) bad("simple reflection index out of range");
    --i;
  }
  return {lam, rd.from_word(word)};
}

json hecke(const HeckeElement& h) {
  json terms = json::array();
  for (const auto& [x, c] : h.sorted_terms()) terms.push_back({{"elt", element(*h.group(), x)}, {"coeff", poly(c)}});
  return {{"terms", terms}};
}

HeckeElement hecke(const AffineWeylPtr& g, const json& j) {
  HeckeElement h(g);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  for (const auto& t : terms) h.add_term(element(*g, field(t, "elt")), poly(field(t, "coeff")));
  return h;
}

json facet(const Facet& f) { return {{"gens", f.gens}}; }

Facet facet(const json& j) {
  Facet f{int_list(field(j, "gens"), "gens")};
  std::sort(f.gens.begin(), f.gens.end());
  f.gens.erase(std::unique(f.gens.begin(), f.gens.end()), f.gens.end());
  return f;
}

json root_datum(const RootDatum& rd) {
  const RootDatumSpec& s = rd.spec();
  return {{"name", s.name}, {"rank", s.rank}, {"simple_roots", s.simple_roots}, {"simple_coroots", s.simple_coroots}};
}

RootDatumSpec root_datum_spec(const json& j) {
  RootDatumSpec s;
  const json& name = field(j, "name");
  if (!name.is_string()) bad("\"name\" must be a string");
  s.name = name.get<std::string>();
  const json& rank = field(j, "rank");
  if (!rank.is_number_integer()) bad("\"rank\" must be an integer");
  s.rank = rank.get<int>();
  for (const char* key : {"simple_roots", "simple_coroots"}) {
    const json& list = field(j, key);
    if (!list.is_array()) bad(std::string("\"") + key + "\" must be an array");
    auto& dst = std::string_view(key) == "simple_roots" ? s.simple_roots : s.simple_coroots;
    for (const auto& v : list) dst.push_back(int_list(v, key));
  }
  return s;
}

json character(const Character& ch) {
  json mults = json::array();
  for (const auto& [nu, m] : ch.mults) mults.push_back({{"wt", cocharacter(nu)}, {"m", integer(m)}});
  return {{"hw", cocharacter(ch.highest_weight)}, {"mults", mults}};
}

json multiplicities(const std::map<Cocharacter, Integer>& m) {
  json out = json::array();
  for (const auto& [nu, c] : m) out.push_back({{"wt", cocharacter(nu)}, {"m", integer(c)}});
  return out;
}

json expansion(const CenterExpansion& e) {
  json out = json::array();
  for (const auto& [mu, c] : e) out.push_back({{"mu", cocharacter(mu)}, {"coeff", poly(c)}});
  return out;
}

json coset_expansion(const AffineWeylGroup& g, const CosetExpansion& e) {
  json out = json::array();
  for (const auto& [dc, c] : e) out.push_back({{"E", element(g, dc.min_rep)}, {"coeff", poly(c)}});
  return out;
}

json structure_table(const ParahoricAlgebra& alg, const std::vector<StructureEntry>& entries) {
  const AffineWeylGroup& g = *alg.group();
  json list = json::array();
  for (const auto& e : entries) {
    list.push_back({{"C", element(g, e.left.min_rep)},
                    {"D", element(g, e.right.min_rep)},
                    {"expansion", coset_expansion(g, e.expansion)}});
  }
  return {{"facet", alg.facet().gens}, {"entries", list}};
}

std::vector<StructureEntry> structure_table(const ParahoricAlgebra& alg, const json& j) {
  const AffineWeylGroup& g = *alg.group();
  if (int_list(field(j, "facet"), "facet") != alg.facet().gens) bad("table belongs to a different facet");
  const json& list = field(j, "entries");
  if (!list.is_array()) bad("\"entries\" must be an array");
  std::vector<StructureEntry> out;
  for (const auto& e : list) {
    StructureEntry entry;
    entry.left = g.double_coset(alg.facet(), element(g, field(e, "C")), alg.facet());
    entry.right = g.double_coset(alg.facet(), element(g, field(e, "D")), alg.facet());
    const json& exp = field(e, "expansion");
    if (!exp.is_array()) bad("\"expansion\" must be an array");
    for (const auto& t : exp) {
      entry.expansion.emplace_back(g.double_coset(alg.facet(), element(g, field(t, "E")), alg.facet()),
                                   poly(field(t, "coeff")));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

json report(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"mu", cocharacter(c.mu)},
                      {"central", c.central},
                      {"unitriangular", c.unitriangular},
                      {"integral", c.integral},
                      {"character", c.character}});
  }
  json products = json::array();
  for (const auto& p : r.products) {
    products.push_back({{"mu", cocharacter(p.mu)},
                        {"mu2", cocharacter(p.mu2)},
                        {"commute", p.commute},
                        {"integral", p.integral},
                        {"tensor", p.tensor}});
  }
  json out = {{"group", r.group}, {"bound", r.bound}, {"checks", checks}, {"products", products}, {"pass", r.pass}};
  if (!r.pass) out["counterexample"] = r.counterexample;
  return out;
}

}  // namespace heckeforge::json
