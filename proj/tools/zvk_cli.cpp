// Command-line front end.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "zvk/abelian.hpp"
#include "zvk/alexander.hpp"
#include "zvk/coset.hpp"
#include "zvk/cover.hpp"
#include "zvk/curves.hpp"
#include "zvk/error.hpp"
#include "zvk/parse.hpp"
#include "zvk/pipeline.hpp"

namespace {

using nlohmann::json;
using namespace zvk;

struct Common {
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes parse errors with the file name so line:column point somewhere.
template <typename F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f(read_input(path));
  } catch (const ParseError& e) {
    throw Error((path == "-" ? std::string("<stdin>") : path) + ":" + e.what());
  }
}

BraidConvention convention_from(const std::string& name) {
  return name == "flipped" ? BraidConvention::Flipped : BraidConvention::Standard;
}

std::vector<std::string> names(const std::vector<Symbol>& gens) {
  std::vector<std::string> out;
  for (Symbol g : gens) out.push_back(g.name());
  return out;
}

json presentation_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(r.to_string());
  return {{"generators", names(p.generators())}, {"relators", rels}, {"text", p.to_string()}};
}

void emit(const Common& c, const std::string& text, const json& structured) {
  if (c.structured()) {
    std::cout << structured.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

// "all" means every k from 0 below the order of the fiber generator.
std::vector<Exponent> patch_parameters(const std::string& text, const Presentation& p,
                                       Symbol fiber) {
  if (text != "all") {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw Error("--k expects an integer or 'all'");
    return {k};
  }
  for (const auto& r : p.relators()) {
    const auto l = r.letters();
    if (l.size() == 1 && l[0].gen == fiber) {
      const Exponent n = l[0].exp < 0 ? -l[0].exp : l[0].exp;
      std::vector<Exponent> ks;
      for (Exponent k = 0; k < n; ++k) ks.push_back(k);
      return ks;
    }
  }
  throw Error("--k all needs a relator " + fiber.name() + "^n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of plane curve complements from braid monodromy"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  int status = 0;

  // lift-monodromy
  std::string braid_text;
  std::string convention = "standard";
  auto* lift = app.add_subcommand("lift-monodromy", "Lift a braid in B3 to Aut F(p, q)");
  lift->add_option("braid", braid_text, "Braid word, e.g. \"s1^-3 s2 s1^3\"")->required();
  lift->add_option("--convention", convention, "Braid action convention")
      ->check(CLI::IsMember({"standard", "flipped"}));
  lift->callback([&] {
    const BraidWord b = parse_braid(braid_text, 3);
    const FreeEndo m = lift_monodromy(braid_action(b, convention_from(convention)));
    emit(common, m.to_string(),
         {{"braid", b.to_string()},
          {"p", m.image(kernel_p()).to_string()},
          {"q", m.image(kernel_q()).to_string()}});
  });

  // zvk
  std::string file;
  bool simplify_after = false;
  auto* zvk_cmd = app.add_subcommand("zvk", "Assemble the van Kampen presentation from braids");
  zvk_cmd->add_option("file", file, "Lines 'kept: <braid>' and 'removed <name>: <braid>'")
      ->required();
  zvk_cmd->add_flag("--simplify", simplify_after, "Apply Tietze simplification");
  zvk_cmd->add_option("--convention", convention, "Braid action convention")
      ->check(CLI::IsMember({"standard", "flipped"}));
  zvk_cmd->callback([&] {
    const ZvkInput in = with_file(file, [](const std::string& t) { return parse_zvk_input(t); });
    Presentation p = zvk_from_braids(in.kept, in.removed, convention_from(convention));
    if (simplify_after) p = tietze_simplify(p);
    emit(common, p.to_string(), presentation_json(p));
  });

  // simplify
  auto* simplify = app.add_subcommand("simplify", "Tietze-simplify a presentation");
  simplify->add_option("file", file, "Presentation file")->required();
  simplify->callback([&] {
    const Presentation p =
        with_file(file, [](const std::string& t) { return parse_presentation(t); });
    const Presentation s = tietze_simplify(p);
    emit(common, s.to_string(), presentation_json(s));
  });

  // patch
  std::string k_text = "all";
  std::string g1_name = "g+";
  std::string g2_name = "g-";
  std::string fiber_name = "p";
  bool serial = false;
  auto* patch = app.add_subcommand("patch", "Add the patching relator g2 g1 = fiber^k");
  patch->add_option("file", file, "Presentation file")->required();
  patch->add_option("--k", k_text, "Integer k or 'all'");
  patch->add_option("--g1", g1_name, "Surviving generator");
  patch->add_option("--g2", g2_name, "Eliminated generator");
  patch->add_option("--fiber", fiber_name, "Fiber generator");
  patch->add_flag("--serial", serial, "Disable the parallel sweep");
  patch->callback([&] {
    const Presentation p =
        with_file(file, [](const std::string& t) { return parse_presentation(t); });
    const Symbol fiber(fiber_name);
    const auto ks = patch_parameters(k_text, p, fiber);
    const auto results = patch_sweep(p, Symbol(g1_name), Symbol(g2_name), ks,
                                     serial ? Execution::Serial : Execution::Parallel, fiber);
    std::string text;
    json rows = json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      text += (i ? "\n" : "") + std::string("k=") + std::to_string(ks[i]) + ": " +
              results[i].to_string();
      rows.push_back({{"k", ks[i]}, {"presentation", presentation_json(results[i])}});
    }
    emit(common, text, rows);
  });

  // abelianize
  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants via Smith form");
  abelianize->add_option("file", file, "Presentation file")->required();
  abelianize->callback([&] {
    const Presentation p =
        with_file(file, [](const std::string& t) { return parse_presentation(t); });
    const AbelianInvariants inv = abelian_invariants(p);
    json torsion = json::array();
    for (const auto& d : inv.torsion) torsion.push_back(d.get_str());
    emit(common, inv.to_string(),
         {{"torsion", torsion}, {"free_rank", inv.free_rank}, {"text", inv.to_string()}});
  });

  // coset-enum
  std::string subgroup_text;
  std::size_t max_cosets = kDefaultMaxCosets;
  auto* coset = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
  coset->add_option("file", file, "Presentation file")->required();
  coset->add_option("--subgroup", subgroup_text, "Comma-separated subgroup generators");
  coset->add_option("--max,--max-cosets", max_cosets, "Coset budget")->check(CLI::PositiveNumber);
  coset->callback([&] {
    const Presentation p =
        with_file(file, [](const std::string& t) { return parse_presentation(t); });
    const auto subgroup = parse_word_list(subgroup_text, p.generators());
    const CosetResult r = enumerate_cosets(p, subgroup, max_cosets);
    if (const auto* overflow = std::get_if<CosetOverflow>(&r)) {
      emit(common, "overflow: more than " + std::to_string(overflow->max_cosets) + " cosets",
           {{"overflow", true}, {"max_cosets", overflow->max_cosets}});
      status = 3;
      return;
    }
    const auto& table = std::get<CosetTable>(r);
    emit(common, "index " + std::to_string(table.cosets()),
         {{"overflow", false}, {"index", table.cosets()}});
  });

  // alexander
  std::string weights_text;
  bool strict_weights = false;
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial via Fox calculus");
  alexander->add_option("file", file, "Presentation file")->required();
  alexander->add_option("--weights", weights_text, "g=1,... (default: every generator 1)");
  alexander->add_flag("--strict-weights", strict_weights,
                      "Reject relators of nonzero total weight");
  alexander->callback([&] {
    const Presentation p =
        with_file(file, [](const std::string& t) { return parse_presentation(t); });
    const WeightedPresentation wp =
        weights_text.empty()
            ? WeightedPresentation::uniform(p)
            : WeightedPresentation(p, parse_weights(weights_text, p.generators()));
    AlexanderOptions opts;
    opts.require_balanced = strict_weights;
    const LaurentPoly delta = alexander_polynomial(wp, opts);
    emit(common, delta.to_string(), {{"polynomial", delta.to_string()}});
  });

  // verify-curves
  std::string node_poly;
  std::string node_point;
  auto* curves = app.add_subcommand("verify-curves", "Exact checks on the curve equations");
  curves->add_option("--node", node_poly, "Check a polynomial in x, y for a node instead");
  curves->add_option("--at", node_point, "Point \"x0, y0\" for --node, e.g. \"2/5*eps, 1/5\"");
  curves->callback([&] {
    if (!node_poly.empty()) {
      const auto comma = node_point.find(',');
      if (comma == std::string::npos) throw Error("--at expects \"x0, y0\"");
      const auto coordinate = [](const std::string& s) {
        const MultiPoly c = parse_polynomial(s);
        if (!c.is_constant()) throw Error("point coordinates must be constants");
        return c.constant_term();
      };
      const SingularPointReport r =
          verify_node(parse_polynomial(node_poly),
                      {coordinate(node_point.substr(0, comma)),
                       coordinate(node_point.substr(comma + 1))});
      emit(common, std::string(r.is_node() ? "node" : "not a node") +
                       " (f = " + r.f_value.to_string() +
                       ", hessian = " + r.hessian_det.to_string() + ")",
           {{"node", r.is_node()},
            {"singular", r.is_singular()},
            {"f", r.f_value.to_string()},
            {"hessian_det", r.hessian_det.to_string()}});
      if (!r.is_node()) status = 1;
      return;
    }
    std::string text;
    json rows = json::array();
    for (const auto& c : curve_checks()) {
      text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + "\n";
      if (!c.pass) {
        text += "       expected: " + c.expected + "\n       computed: " + c.computed + "\n";
      }
      rows.push_back({{"check", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
      if (!c.pass) status = 1;
    }
    text.pop_back();
    emit(common, text, rows);
  });

  // reproduce-paper
  std::string report_file;
  bool flipped = false;
  std::string reproduce_k = "all";
  auto* reproduce = app.add_subcommand("reproduce-paper", "Replay every stage and diff");
  reproduce->add_option("--k", reproduce_k, "Patch parameter: integer or 'all'");
  reproduce->add_option("--output", report_file, "Also write the structured report here");
  reproduce->add_flag("--flipped-convention", flipped, "Negative control: flip the braid action");
  reproduce->add_flag("--serial", serial, "Disable OpenMP kernels");
  reproduce->callback([&] {
    PipelineOptions opts;
    opts.convention = flipped ? BraidConvention::Flipped : BraidConvention::Standard;
    opts.execution = serial ? Execution::Serial : Execution::Parallel;
    if (reproduce_k != "all") {
      const auto ks = patch_parameters(reproduce_k, Presentation({}, {}), Symbol("p"));
      opts.ks = ks;
    }
    const PipelineReport report = reproduce_paper(opts);
    std::cout << (common.structured() ? report.to_structured() : report.to_text());
    if (!report_file.empty()) {
      std::ofstream out(report_file);
      if (!out) throw Error("cannot write " + report_file);
      out << report.to_structured();
    }
    if (!report.overall) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
