// Command-line front end.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdef/abelian.hpp"
#include "pdef/acceptance.hpp"
#include "pdef/error.hpp"
#include "pdef/fuchsian.hpp"
#include "pdef/invariants.hpp"
#include "pdef/presentation.hpp"
#include "pdef/quotient.hpp"
#include "pdef/rewrite.hpp"

using json = nlohmann::ordered_json;
using namespace pdef;

namespace {

struct Output {
  json data;
  std::ostringstream text;
  bool ok = true;
};

struct Common {
  bool as_json = false;
  std::string out_file;
};

struct SearchOptions {
  std::size_t max_order = SearchBudget{}.max_order;
  std::uint64_t max_assignments = SearchBudget{}.max_assignments;
  std::string catalog_file;

  SearchBudget budget() const { return {max_order, max_assignments}; }
  GroupCatalog catalog() const;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupCatalog SearchOptions::catalog() const {
  return catalog_file.empty()
             ? GroupCatalog::default_catalog()
             : GroupCatalog::parse_manifest(read_file(catalog_file));
}

// Inline text, or the contents of a file when no '<' is present and the
// argument names one.
FinitePresentation load_presentation(const std::string& arg) {
  if (arg.find('<') == std::string::npos && std::filesystem::exists(arg)) {
    return parse_presentation(read_file(arg));
  }
  return parse_presentation(arg);
}

std::string q(const Rational& r) { return to_string(r); }

json invariants_json(const AbelianInvariants& inv) {
  json divisors = json::array();
  for (const auto& d : inv.divisors) {
    divisors.push_back(to_string(d));
  }
  return {{"rank", inv.rank},
          {"divisors", divisors},
          {"text", format_invariants(inv)}};
}

struct QuotientOptions {
  std::string spec;
  std::vector<std::string> hom_cyclic;

  FiniteQuotient build(const FinitePresentation& p) const {
    if (!spec.empty() && !hom_cyclic.empty()) {
      throw Error("give either --quotient or --hom-cyclic, not both");
    }
    if (!spec.empty()) {
      return parse_quotient_spec(spec, p.generator_names());
    }
    if (hom_cyclic.size() == 2) {
      const auto n = std::stoul(hom_cyclic[0]);
      std::vector<std::int64_t> exps;
      std::stringstream ss(hom_cyclic[1]);
      std::string item;
      while (std::getline(ss, item, ',')) {
        exps.push_back(std::stoll(item));
      }
      if (exps.size() != p.generator_count()) {
        throw Error("--hom-cyclic needs one exponent per generator");
      }
      return cyclic_quotient(static_cast<std::uint32_t>(n), exps);
    }
    throw Error("a quotient is required: --quotient or --hom-cyclic");
  }
};

void add_quotient_options(CLI::App* cmd, QuotientOptions& opts) {
  cmd->add_option("--quotient", opts.spec,
                  "generator images, e.g. \"x:(1 2),y:(1 2 3)\"");
  cmd->add_option("--hom-cyclic", opts.hom_cyclic,
                  "map onto C_q: q followed by exponents a,b,...")
      ->expected(2);
}

void add_search_options(CLI::App* cmd, SearchOptions& opts) {
  cmd->add_option("--max-order", opts.max_order,
                  "largest catalog group order")
      ->capture_default_str();
  cmd->add_option("--max-assignments", opts.max_assignments,
                  "assignment budget")
      ->capture_default_str();
  cmd->add_option("--catalog", opts.catalog_file,
                  "catalog manifest: lines 'name degree perm ...'");
}

json quotient_json(const FiniteQuotient& fq,
                   const std::vector<std::string>& names) {
  return {{"images", fq.to_string(names)}, {"order", fq.order()}};
}

// def
Output cmd_def(const std::string& text, std::uint64_t p) {
  Output out;
  const auto pres = load_presentation(text);
  const Rational lower = p_deficiency(pres, p);
  const auto inv = abelian_invariants(pres);
  const Rational upper = abelian_p_deficiency_group(inv, p);
  out.data = {{"command", "def"},
              {"presentation", format_presentation(pres)},
              {"p", p},
              {"de_presentation", q(lower)},
              {"abelianisation", invariants_json(inv)},
              {"abelian_upper_bound", q(upper)},
              {"group_interval", {q(lower), q(upper)}}};
  out.text << "de_" << p << "(presentation) = " << q(lower) << "\n"
           << "abelianisation = " << format_invariants(inv) << "\n"
           << "group de_" << p << " in [" << q(lower) << ", " << q(upper)
           << "]" << (lower == upper ? " (exact)" : "") << "\n";
  return out;
}

// abdef
Output cmd_abdef(const std::string& text, std::uint64_t p) {
  Output out;
  const auto pres = load_presentation(text);
  const auto inv = abelian_invariants(pres);
  const Rational ab_pres = abelian_p_deficiency_presentation(pres, p);
  const Rational ab_group = abelian_p_deficiency_group(inv, p);
  out.data = {{"command", "abdef"},
              {"presentation", format_presentation(pres)},
              {"p", p},
              {"abelianisation", invariants_json(inv)},
              {"abelian_de_presentation", q(ab_pres)},
              {"abelian_de_group", q(ab_group)},
              {"d_p", d_p(inv, p)}};
  out.text << "abelianisation = " << format_invariants(inv) << "\n"
           << "abelian de_" << p << "(presentation) = " << q(ab_pres) << "\n"
           << "abelian de_" << p << "(group) = " << q(ab_group) << "\n"
           << "d_" << p << " = " << d_p(inv, p) << "\n";
  return out;
}

// subgroup
Output cmd_subgroup(const std::string& text, const QuotientOptions& qo,
                    std::uint64_t p, bool naive) {
  Output out;
  const auto pres = load_presentation(text);
  const auto fq = qo.build(pres);
  const auto sub = subgroup_presentation(
      pres, fq,
      naive ? RelatorMode::all_conjugates : RelatorMode::class_representatives);
  const SchreierData sd = schreier(coset_table(fq, pres));
  const auto rep = supermultiplicity_check(pres, fq, p);
  const Rational de_sub = p_deficiency(sub, p);
  json basis = json::array();
  for (std::size_t i = 0; i < sd.basis.size(); ++i) {
    basis.push_back({{"name", sd.basis_names()[i]},
                     {"word", format_word(sd.basis[i], pres.generator_names())}});
  }
  out.data = {{"command", "subgroup"},
              {"presentation", format_presentation(pres)},
              {"quotient", quotient_json(fq, pres.generator_names())},
              {"index", rep.index},
              {"relator_mode", naive ? "all_conjugates" : "class_representatives"},
              {"basis", basis},
              {"subgroup_presentation", format_presentation(sub)},
              {"p", p},
              {"de_subgroup", q(de_sub)},
              {"de_original", q(rep.de_original)},
              {"index_times_de_original", q(rep.scaled)},
              {"supermultiplicity_holds", de_sub >= rep.scaled}};
  out.ok = de_sub >= rep.scaled;
  out.text << "quotient " << fq.to_string(pres.generator_names())
           << ", index " << rep.index << "\n";
  for (std::size_t i = 0; i < sd.basis.size(); ++i) {
    out.text << "  " << sd.basis_names()[i] << " = "
             << format_word(sd.basis[i], pres.generator_names()) << "\n";
  }
  out.text << format_presentation(sub) << "\n"
           << "de_" << p << "(subgroup presentation) = " << q(de_sub) << "\n"
           << "index * de_" << p << "(presentation) = " << rep.index << " * "
           << q(rep.de_original) << " = " << q(rep.scaled) << "\n"
           << "supermultiplicity " << (out.ok ? "holds" : "FAILS") << "\n";
  return out;
}

// psize
Output cmd_psize(const std::string& text, const QuotientOptions& qo,
                 std::uint64_t p) {
  Output out;
  const auto pres = load_presentation(text);
  const auto fq = qo.build(pres);
  const auto bound = p_size_bound(pres, fq, p);
  json rels = json::array();
  out.text << "quotient " << fq.to_string(pres.generator_names())
           << ", index d = " << bound.index << "\n";
  for (std::size_t i = 0; i < bound.relators.size(); ++i) {
    const auto& c = bound.relators[i];
    const std::string word =
        format_word(pres.relators()[i], pres.generator_names());
    rels.push_back({{"relator", word},
                    {"k", c.centralizer_index},
                    {"classes", c.classes},
                    {"nu_relator", c.nu_relator},
                    {"nu_k", c.nu_index},
                    {"bound_term", q(c.bound_term)},
                    {"exact_term", q(c.exact_term)}});
    out.text << "  " << word << ": k = " << c.centralizer_index
             << ", classes = " << c.classes << ", nu = " << c.nu_relator
             << ", nu(k) = " << c.nu_index << ", bound " << q(c.bound_term)
             << ", exact " << q(c.exact_term) << "\n";
  }
  out.data = {{"command", "psize"},
              {"presentation", format_presentation(pres)},
              {"quotient", quotient_json(fq, pres.generator_names())},
              {"p", p},
              {"index", bound.index},
              {"relators", rels},
              {"bound", q(bound.value)},
              {"exact", q(bound.exact)},
              {"index_times_size", q(bound.naive)}};
  out.text << "p-size of the rewritten relators = " << q(bound.exact) << "\n"
           << "class bound = " << q(bound.value) << "\n"
           << "index * p-size = " << q(bound.naive) << "\n";
  return out;
}

json signature_json(const FuchsianSignature& sig) {
  return {{"text", sig.to_string()},
          {"genus", sig.genus()},
          {"periods", sig.periods()}};
}

json construction_json(const KernelConstruction& k,
                       const FuchsianSignature& sig, std::uint64_t p) {
  const auto standard = standard_presentation(sig);
  return {{"case", to_string(k.fuchsian_case)},
          {"index", k.index},
          {"action", k.action.to_string(standard)},
          {"signature", signature_json(k.result)},
          {"volume", q(volume(k.result))},
          {"de_standard", q(de_standard(k.result, p))}};
}

// fuchsian
Output cmd_fuchsian(const std::string& text, std::uint64_t p,
                    bool construct) {
  Output out;
  const auto sig = parse_signature(text);
  const auto de = de_exact(sig, p);
  out.data = {{"command", "fuchsian"},
              {"signature", signature_json(sig)},
              {"standard_presentation",
               format_presentation(standard_presentation(sig))},
              {"p", p},
              {"volume", q(volume(sig))},
              {"de_standard", q(de.lower)},
              {"de_upper", q(de.upper)},
              {"case", to_string(de.fuchsian_case)}};
  out.text << "signature " << sig.to_string() << "\n"
           << "volume = " << q(volume(sig)) << "\n"
           << "de_" << p << "(standard presentation) = " << q(de.lower) << "\n"
           << "upper bound = " << q(de.upper) << "\n"
           << "case = " << to_string(de.fuchsian_case) << "\n";
  if (de.value) {
    out.data["de_exact"] = {{"status", "exact"}, {"value", q(*de.value)}};
    out.text << "de_" << p << "(group) = " << q(*de.value) << "\n";
  } else {
    out.data["de_exact"] = {{"status", "negative"},
                            {"interval", {q(de.lower), q(de.upper)}}};
    out.text << "de_" << p << "(group) is negative; bounds [" << q(de.lower)
             << ", " << q(de.upper) << "]\n";
  }
  if (construct && de.fuchsian_case != FuchsianCase::none) {
    const auto k = kernel_construction(sig, p, de.fuchsian_case);
    out.data["construction"] = construction_json(k, sig, p);
    out.text << "kernel of index " << k.index << ": "
             << k.result.to_string() << ", de_" << p << " = "
             << q(de_standard(k.result, p)) << "\n";
  }
  return out;
}

// singerman
Output cmd_singerman(const std::string& text, const std::string& action,
                     const std::string& which, bool descent, std::uint64_t p) {
  Output out;
  const auto sig = parse_signature(text);
  const auto standard = standard_presentation(sig);
  std::optional<KernelConstruction> k;
  if (descent) {
    k = descent_construction(sig);
  } else if (!which.empty()) {
    FuchsianCase c = FuchsianCase::none;
    for (auto cand : {FuchsianCase::a, FuchsianCase::b, FuchsianCase::c,
                      FuchsianCase::d}) {
      if (to_string(cand) == which) {
        c = cand;
      }
    }
    if (c == FuchsianCase::none) {
      throw Error("--case must be one of a, b, c, d");
    }
    k = kernel_construction(sig, p, c);
  }
  EllipticAction act;
  if (k) {
    act = k->action;
  } else if (!action.empty()) {
    const auto images =
        parse_generator_images(action, standard.generator_names());
    act.degree = images.empty() ? 1 : std::max<std::size_t>(
                                          images.front().degree(), 1);
    const std::size_t r = sig.periods().size();
    act.elliptic.assign(images.begin(),
                        images.begin() + static_cast<std::ptrdiff_t>(r));
    act.hyperbolic.assign(images.begin() + static_cast<std::ptrdiff_t>(r),
                          images.end());
  } else {
    throw Error("give --action, --case or --descent");
  }
  const auto result = singerman_transfer(sig, act);
  const Rational n = static_cast<std::int64_t>(act.degree);
  out.data = {{"command", "singerman"},
              {"signature", signature_json(sig)},
              {"action", act.to_string(standard)},
              {"index", act.degree},
              {"result", signature_json(result)},
              {"volume", q(volume(sig))},
              {"result_volume", q(volume(result))},
              {"riemann_hurwitz", volume(result) == n * volume(sig)},
              {"p", p},
              {"de_standard", q(de_standard(sig, p))},
              {"result_de_standard", q(de_standard(result, p))}};
  out.text << sig.to_string() << " with action "
           << act.to_string(standard) << "\n"
           << "subgroup of index " << act.degree << ": " << result.to_string()
           << "\n"
           << "volume " << q(volume(sig)) << " -> " << q(volume(result))
           << "\n"
           << "de_" << p << " " << q(de_standard(sig, p)) << " -> "
           << q(de_standard(result, p)) << "\n";
  return out;
}

// chi
Output cmd_chi(const std::string& text, std::uint64_t p,
               const SearchOptions& so) {
  Output out;
  const auto pres = load_presentation(text);
  const auto est = chi_p_estimate(pres, p, so.catalog(), so.budget());
  json samples = json::array();
  out.text << "index  gens  rels  de_" << p << "  ratio\n";
  for (const auto& s : est.samples) {
    samples.push_back({{"index", s.index},
                       {"quotient", s.quotient.to_string(pres.generator_names())},
                       {"generators", s.generators},
                       {"relators", s.relators},
                       {"de", q(s.de)},
                       {"ratio", q(s.ratio)}});
    out.text << s.index << "  " << s.generators << "  " << s.relators << "  "
             << q(s.de) << "  " << q(s.ratio) << "\n";
  }
  const auto& best = est.samples.at(est.best_sample);
  out.data = {{"command", "chi"},
              {"presentation", format_presentation(pres)},
              {"p", p},
              {"best_ratio", q(est.best_ratio)},
              {"chi_p_upper_bound", q(-est.best_ratio)},
              {"witness", best.quotient.to_string(pres.generator_names())},
              {"subgroups_examined", est.samples.size()},
              {"assignments_examined", est.assignments_examined},
              {"budget_exhausted", est.budget_exhausted},
              {"samples", samples}};
  out.text << "best de/index = " << q(est.best_ratio) << " at index "
           << best.index << " ("
           << best.quotient.to_string(pres.generator_names()) << ")\n"
           << "chi_" << p << " <= " << q(-est.best_ratio) << "\n"
           << est.samples.size() << " kernels, "
           << est.assignments_examined << " assignments"
           << (est.budget_exhausted ? ", budget exhausted" : "") << "\n";
  return out;
}

// gradient
Output cmd_gradient(const std::string& text, std::uint64_t p,
                    const SearchOptions& so) {
  Output out;
  const auto pres = load_presentation(text);
  const auto win = gradient_window(pres, p, so.catalog(), so.budget());
  json samples = json::array();
  out.text << "index  d_" << p << "  ratio\n";
  for (const auto& s : win.samples) {
    samples.push_back({{"index", s.index},
                       {"quotient", s.quotient.to_string(pres.generator_names())},
                       {"d_p", s.d_p},
                       {"ratio", q(s.ratio)}});
    out.text << s.index << "  " << s.d_p << "  " << q(s.ratio) << "\n";
  }
  out.data = {{"command", "gradient"},
              {"presentation", format_presentation(pres)},
              {"p", p},
              {"window_indices", win.indices},
              {"window_min_ratio", q(win.min_ratio)},
              {"window_max_ratio", q(win.max_ratio)},
              {"assignments_examined", win.assignments_examined},
              {"budget_exhausted", win.budget_exhausted},
              {"samples", samples}};
  out.text << "window over indices";
  for (auto i : win.indices) {
    out.text << " " << i;
  }
  out.text << ": min " << q(win.min_ratio) << ", max " << q(win.max_ratio)
           << "\n";
  return out;
}

// witness
Output cmd_witness(const std::string& text, std::uint64_t p,
                   const QuotientOptions& qo, const SearchOptions& so) {
  Output out;
  const auto pres = load_presentation(text);
  std::optional<PowerWitness> w;
  if (!qo.spec.empty() || !qo.hom_cyclic.empty()) {
    if (p_deficiency(pres, p) != 0) {
      throw Error("the presentation must have p-deficiency 0");
    }
    w = power_witness_for(pres, p, qo.build(pres));
  } else {
    w = lemma_power_witness(pres, p, so.catalog(), so.budget());
  }
  out.data = {{"command", "witness"},
              {"presentation", format_presentation(pres)},
              {"p", p},
              {"found", w.has_value()}};
  if (!w) {
    out.ok = false;
    out.text << "no witness found\n";
    return out;
  }
  const auto& names = pres.generator_names();
  out.data["relator"] = format_word(w->relator, names);
  out.data["root"] = format_word(w->root, names);
  out.data["exponent"] = w->exponent;
  out.data["quotient"] = quotient_json(w->quotient, names);
  out.data["index"] = w->report.index;
  out.data["de_kernel"] = q(w->report.de_subgroup);
  out.data["positive"] = w->report.de_subgroup > 0;
  out.ok = w->report.de_subgroup > 0;
  out.text << "relator " << format_word(w->relator, names) << " = ("
           << format_word(w->root, names) << ")^" << w->exponent << "\n"
           << "quotient " << w->quotient.to_string(names) << ", root image "
           << "nontrivial\n"
           << "kernel of index " << w->report.index << " has de_" << p
           << " = " << q(w->report.de_subgroup) << "\n";
  return out;
}

// verify
Output cmd_verify(const std::vector<std::string>& only) {
  Output out;
  std::vector<std::string> keys;
  for (const auto& item : only) {
    std::stringstream ss(item);
    std::string k;
    while (std::getline(ss, k, ',')) {
      if (!k.empty()) {
        keys.push_back(k);
      }
    }
  }
  const auto results = acceptance::run(keys);
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back({{"id", r.id},
                      {"key", r.key},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"detail", r.detail}});
    out.text << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] "
             << r.key << ": " << r.title << "\n      " << r.detail << "\n";
    passed += r.passed ? 1 : 0;
  }
  out.ok = passed == results.size();
  out.data = {{"command", "verify"},
              {"passed", passed},
              {"total", results.size()},
              {"all_passed", out.ok},
              {"checks", checks}};
  out.text << passed << "/" << results.size() << " checks passed\n";
  return out;
}

int emit(const Output& out, const Common& common) {
  const std::string body =
      common.as_json ? out.data.dump(2) + "\n" : out.text.str();
  if (common.out_file.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(common.out_file);
    if (!f) {
      throw Error("cannot write '" + common.out_file + "'");
    }
    f << body;
  }
  return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-deficiency toolkit for finitely presented groups"};
  app.require_subcommand(1);

  Common common;
  std::string text;
  std::uint64_t p = 2;
  QuotientOptions qo;
  SearchOptions so;
  bool naive = false;
  bool construct = false;
  std::string action;
  std::string which;
  bool descent = false;
  std::vector<std::string> only;

  auto common_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--json", common.as_json, "JSON output");
    cmd->add_option("-o,--output", common.out_file, "write output to a file");
  };
  auto prime_flag = [&](CLI::App* cmd) {
    cmd->add_option("-p,--prime", p, "the prime p")->capture_default_str();
  };
  auto presentation_arg = [&](CLI::App* cmd) {
    cmd->add_option("presentation", text,
                    "presentation \"< x, y | x^2, y^3 >\" or a file")
        ->required();
  };

  auto* def = app.add_subcommand("def", "p-deficiency with abelian bound");
  presentation_arg(def);
  prime_flag(def);
  common_flags(def);

  auto* abdef = app.add_subcommand("abdef", "abelian invariants and bounds");
  presentation_arg(abdef);
  prime_flag(abdef);
  common_flags(abdef);

  auto* subgroup =
      app.add_subcommand("subgroup", "kernel presentation of a finite quotient");
  presentation_arg(subgroup);
  prime_flag(subgroup);
  add_quotient_options(subgroup, qo);
  subgroup->add_flag("--naive", naive, "keep every conjugate of each relator");
  common_flags(subgroup);

  auto* psize =
      app.add_subcommand("psize", "p-size of the relators in a kernel");
  presentation_arg(psize);
  prime_flag(psize);
  add_quotient_options(psize, qo);
  common_flags(psize);

  auto* fuchsian =
      app.add_subcommand("fuchsian", "signature volume, bounds and case");
  fuchsian->add_option("signature", text, "signature \"(0; 6,12,12)\"")
      ->required();
  prime_flag(fuchsian);
  fuchsian->add_flag("--construct", construct,
                     "also build the kernel of the applicable case");
  common_flags(fuchsian);

  auto* singerman =
      app.add_subcommand("singerman", "signature of a finite index subgroup");
  singerman->add_option("signature", text, "signature \"(0; 4,4,4)\"")
      ->required();
  singerman->add_option("--action", action,
                        "images of x1.., u1, v1.., e.g. \"x1:(1 2),x2:(1 2)\"");
  singerman->add_option("--case", which, "use the kernel of case a, b, c or d");
  singerman->add_flag("--descent", descent,
                      "use the index-2 kernel for p = 2 with two periods 2 mod 4");
  prime_flag(singerman);
  common_flags(singerman);

  auto* chi = app.add_subcommand("chi", "p-Euler characteristic estimate");
  presentation_arg(chi);
  prime_flag(chi);
  add_search_options(chi, so);
  common_flags(chi);

  auto* gradient = app.add_subcommand("gradient", "d_p / index window");
  presentation_arg(gradient);
  prime_flag(gradient);
  add_search_options(gradient, so);
  common_flags(gradient);

  auto* witness =
      app.add_subcommand("witness", "power relator surviving in a quotient");
  presentation_arg(witness);
  prime_flag(witness);
  add_quotient_options(witness, qo);
  add_search_options(witness, so);
  common_flags(witness);

  auto* verify = app.add_subcommand("verify", "run the example checks");
  verify->add_option("--only", only, "check keys or numbers, comma separated");
  common_flags(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out;
    if (*def) {
      out = cmd_def(text, p);
    } else if (*abdef) {
      out = cmd_abdef(text, p);
    } else if (*subgroup) {
      out = cmd_subgroup(text, qo, p, naive);
    } else if (*psize) {
      out = cmd_psize(text, qo, p);
    } else if (*fuchsian) {
      out = cmd_fuchsian(text, p, construct);
    } else if (*singerman) {
      out = cmd_singerman(text, action, which, descent, p);
    } else if (*chi) {
      out = cmd_chi(text, p, so);
    } else if (*gradient) {
      out = cmd_gradient(text, p, so);
    } else if (*witness) {
      out = cmd_witness(text, p, qo, so);
    } else if (*verify) {
      out = cmd_verify(only);
    }
    return emit(out, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
