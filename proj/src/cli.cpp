#include "ealie/cli.hpp"

#include "ealie/axioms.hpp"
#include "ealie/constructions.hpp"
#include "ealie/ears.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace ealie {

using nlohmann::ordered_json;

namespace {

bool classical(const std::string& c) {
  return c == "sp-classical" || c == "sqrt-extension" || c == "cocycle-extension";
}

std::vector<int> q_upper(const InstanceSpec& spec) {
  if (!spec.q.empty()) return spec.q;
  return std::vector<int>(spec.nu * (spec.nu - 1) / 2, -1);
}

std::shared_ptr<SkewTorusAlgebra> torus(const InstanceSpec& spec) {
  return std::make_shared<SkewTorusAlgebra>(spec.ell, SignMatrix(spec.nu, q_upper(spec)), true);
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["axiom"] = v.axiom;
  j["status"] = to_string(v.status);
  j["required"] = v.required;
  j["detail"] = v.detail;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

AxiomReport serre_report(const RootSystemWindow& win) {
  AxiomReport rep;
  rep.suite = "SERRE";
  auto res = serre_check(win, default_simple_preimages(win));
  Verdict rel{"relations", res.ok ? Status::Pass : Status::Fail, "[e_i, f_j] = delta_ij h_i and theta^+-_ij = 0", ""};
  if (!res.ok) {
    std::ostringstream os;
    os << res.relation << " at (" << res.offending.first + 1 << "," << res.offending.second + 1
       << "): " << win.algebra().describe(res.residual);
    rel.witness = os.str();
  }
  rep.add(rel);
  auto matrix = [](const std::vector<std::vector<int>>& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
      os << ']';
    }
    os << ']';
    return os.str();
  };
  rep.meta["cartan"] = matrix(res.cartan);
  rep.meta["expected"] = matrix(res.expected);
  bool same = res.ok && res.cartan == res.expected;
  rep.add({"cartan", same ? Status::Pass : Status::Fail, "Cartan matrix of the simple preimages",
           same ? "" : "got " + rep.meta["cartan"] + ", expected " + rep.meta["expected"]});
  rep.add({"degree-zero", res.degree_zero ? Status::Pass : Status::Fail, "generators lie in lattice degree 0",
           res.degree_zero ? "" : "a simple preimage has nonzero lattice degree"});
  return rep;
}

AxiomReport tame_report(const RootSystemWindow& win) {
  AxiomReport rep;
  rep.suite = "TAME";
  auto t = tameness_check(win);
  rep.add({"centralizer", t.tame ? Status::WindowVerified : Status::Fail,
           "C_L(L_c) within L_c on window degrees", t.witness});
  rep.add({"perp-is-center", t.perp_is_center ? Status::WindowVerified : Status::Fail,
           "L_c^perp equals Z(L_c) on window degrees",
           t.perp_is_center ? "" : "L_c^perp and Z(L_c) differ"});
  rep.meta["center_dim"] = std::to_string(t.core.center.size());
  return rep;
}

AxiomReport props_report(const RootSystemWindow& win, std::uint64_t seed) {
  const LieAlgebra& alg = win.algebra();
  AxiomReport rep;
  rep.suite = "PROPS";
  std::mt19937_64 rng(seed);
  auto box = lattice_box(win.nu(), win.window());
  auto toral = win.toral().elements;
  auto coeff = [&rng]() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return make_rational(num(rng), den(rng));
  };
  auto element = [&]() {
    const auto& s = box[std::uniform_int_distribution<std::size_t>(0, box.size() - 1)(rng)];
    auto basis = alg.homogeneous_basis(s);
    Vec v;
    for (int k = 0; k < 2 && !basis.empty(); ++k)
      v.axpy(coeff(), basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)]);
    if (!toral.empty())
      v.axpy(coeff(), toral[std::uniform_int_distribution<std::size_t>(0, toral.size() - 1)(rng)]);
    return v;
  };
  const int draws = 200;
  std::string jacobi, skew, invariance;
  for (int k = 0; k < draws; ++k) {
    Vec x = element(), y = element(), z = element();
    Vec j = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) + alg.bracket(z, alg.bracket(x, y));
    if (!j.is_zero() && jacobi.empty()) jacobi = "draw " + std::to_string(k) + ": " + alg.describe(j);
    if (!(alg.bracket(x, y) == -alg.bracket(y, x)) && skew.empty()) skew = "draw " + std::to_string(k);
    if (alg.form(alg.bracket(x, y), z) != alg.form(x, alg.bracket(y, z)) && invariance.empty())
      invariance = "draw " + std::to_string(k) + ": x = " + alg.describe(x) + ", y = " + alg.describe(y) +
                   ", z = " + alg.describe(z);
  }
  auto add = [&rep](const std::string& name, const std::string& what, const std::string& witness) {
    rep.add({name, witness.empty() ? Status::Pass : Status::Fail, what, witness});
  };
  add("jacobi", std::to_string(draws) + " random triples", jacobi);
  add("antisymmetry", std::to_string(draws) + " random pairs", skew);
  add("invariance", std::to_string(draws) + " random triples", invariance);
  rep.meta["seed"] = std::to_string(seed);
  return rep;
}

}  // namespace

const std::vector<ConstructionInfo>& constructions() {
  static const std::vector<ConstructionInfo> list{
      {"quantum-torus", "derived algebra G of skew matrices over the quantum torus (--ell, --nu, --q)"},
      {"affinized", "G + C + D built from the quantum-torus algebra (--ell, --nu, --q)"},
      {"sp-classical", "split classical algebra over Q (--type B|C|D, --rank)"},
      {"sqrt-extension", "classical algebra over Q(sqrt p_1, ..., sqrt p_k) (--type, --rank, --primes)"},
      {"cocycle-extension", "classical algebra A plus a one-dimensional form space W (--type, --rank, --primes)"},
  };
  return list;
}

std::vector<int> parse_q(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item == "1" || item == "+1") {
      out.push_back(1);
    } else if (item == "-1") {
      out.push_back(-1);
    } else {
      throw UsageError("q entries must be ±1");
    }
  }
  return out;
}

std::vector<std::string> parse_suites(const std::string& text) {
  static const std::set<std::string> known{"T", "D", "EARS", "SERRE", "TAME", "PROPS"};
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::transform(item.begin(), item.end(), item.begin(), ::toupper);
    if (!known.count(item)) throw UsageError("unknown suite '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("no suites given");
  return out;
}

void validate(const InstanceSpec& spec) {
  const auto& list = constructions();
  if (std::none_of(list.begin(), list.end(), [&](const auto& c) { return c.name == spec.construction; }))
    throw UsageError("unknown construction '" + spec.construction + "'");
  for (int x : spec.q)
    if (x != 1 && x != -1) throw UsageError("q entries must be ±1");
  if (spec.window < 0) throw UsageError("window must be >= 0");
  if (spec.nu < 0) throw UsageError("nu must be >= 0");
  if (classical(spec.construction)) {
    if (spec.nu != 0) throw UsageError(spec.construction + " has nu = 0");
    if (spec.type != "B" && spec.type != "C" && spec.type != "D") throw UsageError("type must be B, C or D");
    if (spec.rank < 1) throw UsageError("rank must be >= 1");
    if (spec.construction == "sp-classical" && !spec.primes.empty())
      throw UsageError("sp-classical takes no primes; use sqrt-extension");
  } else {
    if (spec.ell < 1) throw UsageError("ell must be >= 1");
    if (!spec.q.empty() && static_cast<int>(spec.q.size()) != spec.nu * (spec.nu - 1) / 2)
      throw UsageError("q needs nu(nu-1)/2 = " + std::to_string(spec.nu * (spec.nu - 1) / 2) + " entries");
    if (!spec.primes.empty()) throw UsageError(spec.construction + " takes no primes");
  }
}

AlgebraPtr build_instance(const InstanceSpec& spec) {
  validate(spec);
  try {
    const auto& c = spec.construction;
    if (c == "quantum-torus") return torus(spec);
    if (c == "affinized") return affinize(torus(spec));
    if (c == "sp-classical" || c == "sqrt-extension")
      return build_extension_example(spec.type, spec.rank, spec.primes);
    return direct_sum_with_abelian(build_extension_example(spec.type, spec.rank, spec.primes), 1);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

RunResult run_verification(const InstanceSpec& spec, const std::vector<std::string>& suites) {
  AlgebraPtr alg = build_instance(spec);
  if (std::count(suites.begin(), suites.end(), "T") && !alg->grading_is_internal())
    throw UsageError("suite T needs the lattice grading inside the toral part; use --construction affinized");
  RootSystemWindow win(alg, spec.window);

  RunResult out;
  for (const auto& s : suites) {
    if (s == "T") {
      out.reports.push_back(check_T(win));
    } else if (s == "D") {
      out.reports.push_back(check_D(win));
    } else if (s == "EARS") {
      out.reports.push_back(check_ears_axioms(root_data(win)));
    } else if (s == "SERRE") {
      out.reports.push_back(serre_report(win));
    } else if (s == "TAME") {
      out.reports.push_back(tame_report(win));
    } else {
      out.reports.push_back(props_report(win, spec.seed));
    }
    out.reports.back().suite = s;
  }

  ordered_json doc;
  auto& inst = doc["instance"];
  inst["construction"] = spec.construction;
  inst["label"] = alg->label();
  inst["ell"] = alg->weight_dim();
  inst["nu"] = alg->grading_rank();
  inst["q"] = classical(spec.construction) ? std::vector<int>{} : q_upper(spec);
  inst["type"] = alg->root_type();
  inst["rank"] = alg->root_rank();
  inst["window"] = spec.window;
  inst["primes"] = spec.primes;
  inst["seed"] = spec.seed;
  doc["suite_results"] = ordered_json::object();
  doc["witnesses"] = ordered_json::array();
  for (const auto& rep : out.reports) {
    ordered_json r;
    r["passed"] = rep.passed();
    r["verdicts"] = ordered_json::array();
    for (const auto& v : rep.verdicts) {
      r["verdicts"].push_back(verdict_json(v));
      if (!v.ok()) doc["witnesses"].push_back({{"suite", rep.suite}, {"axiom", v.axiom}, {"witness", v.witness}});
    }
    r["meta"] = rep.meta;
    doc["suite_results"][rep.suite] = r;
    out.passed = out.passed && rep.passed();
  }
  out.json = doc.dump(2);
  return out;
}

void export_window(const InstanceSpec& spec, std::ostream& out) {
  AlgebraPtr alg = build_instance(spec);
  RootSystemWindow win(alg, spec.window);
  for (const auto& r : win.roots()) {
    ordered_json rec;
    Rational n = win.norm(r);
    rec["finite"] = r.finite;
    rec["lattice"] = r.lattice;
    rec["dim"] = win.space(r).size();
    rec["norm"] = to_fraction_string(n);
    rec["isotropic"] = sgn(n) == 0;
    out << rec.dump() << '\n';
  }
  std::vector<Lattice> iso;
  for (const auto& r : win.isotropic_roots()) iso.push_back(r.lattice);
  ordered_json footer;
  footer["nullity"] = IntLattice::generated_by(alg->grading_rank(), iso).rank();
  footer["type"] = alg->root_type();
  footer["rank"] = alg->root_rank();
  footer["window"] = spec.window;
  out << footer.dump() << '\n';
}

}  // namespace ealie
