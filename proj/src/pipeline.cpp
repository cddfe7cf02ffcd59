#include "zvk/pipeline.hpp"

#include <functional>
#include <json.hpp>
#include <sstream>

#include "zvk/abelian.hpp"
#include "zvk/alexander.hpp"
#include "zvk/coset.hpp"
#include "zvk/cover.hpp"
#include "zvk/curves.hpp"
#include "zvk/error.hpp"
#include "zvk/expected_data.hpp"
#include "zvk/metacyclic.hpp"
#include "zvk/parse.hpp"

namespace zvk {

namespace {

using nlohmann::json;

const json& expected_data() {
  static const json data = json::parse(detail::kExpectedStagesJson);
  return data;
}

struct ExpectedItem {
  std::string label;
  std::string value;
  std::string origin;
};

struct ExpectedStage {
  std::string name;
  std::string origin;
  std::vector<ExpectedItem> items;
};

ExpectedStage expected_stage(std::size_t index) {
  const json& s = expected_data().at("stages").at(index);
  ExpectedStage out{s.at("name"), s.at("origin"), {}};
  for (const auto& item : s.at("items")) {
    out.items.push_back({item.at(0), item.at(1), item.size() > 2 ? item.at(2) : s.at("origin")});
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<StageItem>& items, std::string StageItem::*field) {
  std::string s;
  for (const auto& item : items) {
    if (!s.empty()) s += "; ";
    s += item.label + ": " + item.*field;
  }
  return s;
}

// Computed values keyed by label, with an optional comparison other than
// string equality.
struct Computed {
  std::string value;
  std::function<bool(const std::string&)> matches;
};

using StageBody = std::function<std::vector<std::pair<std::string, Computed>>()>;

PipelineStage run_stage(std::size_t index, const StageBody& body) {
  const ExpectedStage exp = expected_stage(index);
  PipelineStage stage{exp.name, exp.origin, "", "", true, {}};
  std::vector<std::pair<std::string, Computed>> computed;
  std::string failure;
  try {
    computed = body();
  } catch (const std::exception& e) {
    failure = std::string("error: ") + e.what();
  }
  for (const auto& item : exp.items) {
    StageItem out{item.label, item.origin, item.value, failure, false};
    if (failure.empty()) {
      const auto it = std::find_if(computed.begin(), computed.end(),
                                   [&item](const auto& c) { return c.first == item.label; });
      if (it == computed.end()) {
        out.computed = "missing";
      } else {
        out.computed = it->second.value;
        out.match = it->second.matches ? it->second.matches(item.value)
                                       : it->second.value == item.value;
      }
    }
    stage.match = stage.match && out.match;
    stage.items.push_back(std::move(out));
  }
  stage.expected = join(stage.items, &StageItem::expected);
  stage.computed = join(stage.items, &StageItem::computed);
  return stage;
}

Computed plain(std::string value) { return {std::move(value), {}}; }

// Equal as presentations after relator normalization.
Computed presentation_value(const Presentation& p) {
  return {p.to_string(), [p](const std::string& expected) {
            const Presentation e = normalize_relators(parse_presentation(expected));
            return e == normalize_relators(p);
          }};
}

// Equal as endomorphisms of F(p, q) after parsing the expected images.
Computed endo_value(const FreeEndo& m) {
  return {m.to_string(), [m](const std::string& expected) {
            const std::string text = expected;
            std::vector<Symbol> domain;
            std::vector<Word> images;
            std::size_t start = 0;
            while (start <= text.size()) {
              const auto comma = text.find(',', start);
              const std::string part = text.substr(start, comma - start);
              const auto arrow = part.find("->");
              if (arrow == std::string::npos) return false;
              domain.push_back(parse_word(part.substr(0, arrow)).letters()[0].gen);
              images.push_back(parse_word(part.substr(arrow + 2)));
              if (comma == std::string::npos) break;
              start = comma + 1;
            }
            return FreeEndo(domain, images) == m;
          }};
}

Presentation reference_zvk(const ReferenceInputs& in, BraidConvention convention) {
  std::vector<BraidWord> kept;
  for (const auto& [label, b] : in.kept) kept.push_back(b);
  std::vector<std::pair<Symbol, BraidWord>> removed;
  for (const auto& r : in.removed) removed.emplace_back(r.generator, r.braid);
  return zvk_from_braids(kept, removed, convention);
}

}  // namespace

ReferenceInputs reference_inputs() {
  const json& in = expected_data().at("inputs");
  ReferenceInputs out{{}, {}, Symbol(in.at("patch").at("g1").get<std::string>()),
                      Symbol(in.at("patch").at("g2").get<std::string>()),
                      Symbol(in.at("patch").at("fiber").get<std::string>()), {}};
  for (const auto& k : in.at("kept")) {
    out.kept.emplace_back(k.at(0), parse_braid(k.at(1).get<std::string>(), 3));
  }
  for (const auto& r : in.at("removed")) {
    out.removed.push_back({Symbol(r.at(0).get<std::string>()), r.at(1),
                           parse_braid(r.at(2).get<std::string>(), 3)});
  }
  for (Exponent k = in.at("patch").at("k_first"); k <= in.at("patch").at("k_last"); ++k) {
    out.ks.push_back(k);
  }
  return out;
}

Presentation zvk_from_braids(const std::vector<BraidWord>& kept,
                             const std::vector<std::pair<Symbol, BraidWord>>& removed,
                             BraidConvention convention) {
  std::vector<FreeEndo> kept_lifts;
  for (const auto& b : kept) kept_lifts.push_back(lift_monodromy(braid_action(b, convention)));
  std::vector<std::pair<Symbol, FreeEndo>> removed_lifts;
  for (const auto& [g, b] : removed) {
    removed_lifts.emplace_back(g, lift_monodromy(braid_action(b, convention)));
  }
  return zvk_assemble(kept_lifts, removed_lifts);
}

Presentation torus_braid_quotient() {
  return parse_presentation("gens: s1, s2; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1, s1 s2 s1 s2 s1 s2");
}

PipelineReport reproduce_paper(const PipelineOptions& options) {
  const ReferenceInputs in = reference_inputs();
  const std::vector<Exponent> ks = options.ks.value_or(in.ks);
  PipelineReport report;

  report.stages.push_back(run_stage(0, [&] {
    std::vector<std::pair<std::string, Computed>> out;
    for (const auto& [label, b] : in.kept) {
      out.emplace_back(label, plain(braid_action(b, options.convention).to_string()));
    }
    for (const auto& r : in.removed) {
      out.emplace_back(r.label, plain(braid_action(r.braid, options.convention).to_string()));
    }
    return out;
  }));

  report.stages.push_back(run_stage(1, [&] {
    std::vector<std::pair<std::string, Computed>> out;
    for (const auto& [label, b] : in.kept) {
      out.emplace_back(label, endo_value(lift_monodromy(braid_action(b, options.convention))));
    }
    for (const auto& r : in.removed) {
      out.emplace_back(r.label,
                       endo_value(lift_monodromy(braid_action(r.braid, options.convention))));
    }
    return out;
  }));

  // Later stages build on the simplified and patched presentations.
  std::optional<Presentation> patched;
  report.stages.push_back(run_stage(2, [&] {
    const Presentation g1 = tietze_simplify(reference_zvk(in, options.convention));
    return std::vector<std::pair<std::string, Computed>>{{"simplified", presentation_value(g1)}};
  }));

  report.stages.push_back(run_stage(3, [&] {
    const Presentation g1 = tietze_simplify(reference_zvk(in, options.convention));
    if (ks.empty()) throw Error("no patch parameters");
    const auto results = patch_sweep(g1, in.g1, in.g2, ks, options.execution, in.fiber);
    patched = results.front();
    bool uniform = true;
    for (const auto& r : results) uniform = uniform && r == results.front();
    if (uniform) {
      return std::vector<std::pair<std::string, Computed>>{
          {"every k", presentation_value(results.front())}};
    }
    std::string listing;
    for (std::size_t i = 0; i < results.size(); ++i) {
      listing += (i ? "; k=" : "k=") + std::to_string(ks[i]) + ": " + results[i].to_string();
    }
    return std::vector<std::pair<std::string, Computed>>{{"every k", plain(listing)}};
  }));

  const auto require_patched = [&patched]() -> const Presentation& {
    if (!patched) throw Error("patched presentation unavailable");
    return *patched;
  };

  report.stages.push_back(run_stage(4, [&] {
    const Presentation& lemma = require_patched();
    const auto core = find_metacyclic_core(lemma);
    if (!core) throw Error("no metacyclic core in " + lemma.to_string());
    const Symbol p = core->p;
    const Symbol g = core->g;
    const Word commutator{{p, -1}, {g, -1}, {p, 1}, {g, 1}};
    const MetacyclicElement nf = metacyclic_normal_form(core->form, commutator, p, g);
    Word nf_word = Word::generator(p, nf.a) * Word::generator(g, nf.b);
    const CommutantReport c = commutant_report(core->form, p, g);
    std::string quotient;
    const auto order = quotient_order(lemma, {Word::generator(g, 3)}, 10000);
    if (const auto* n = std::get_if<std::size_t>(&order)) {
      quotient = std::to_string(*n);
    } else {
      quotient = "overflow";
    }
    return std::vector<std::pair<std::string, Computed>>{
        {"commutator [p^-1, g+^-1]", plain(nf_word.to_string())},
        {"order", plain(std::to_string(c.order))},
        {"central", plain(yes_no(c.central))},
        {"certified in Z/9 x| Z/3", plain(yes_no(c.order_certified))},
        {"|G / <g+^3>| by coset enumeration", plain(quotient)},
    };
  }));

  report.stages.push_back(run_stage(5, [&] {
    return std::vector<std::pair<std::string, Computed>>{
        {"patched group", plain(abelian_invariants(require_patched()).to_string())},
        {"B3 / (s1 s2)^3", plain(abelian_invariants(torus_braid_quotient()).to_string())},
    };
  }));

  report.stages.push_back(run_stage(6, [&] {
    AlexanderOptions opts;
    opts.execution = options.execution;
    const auto b3 = WeightedPresentation::uniform(torus_braid_quotient());
    const auto a6 = WeightedPresentation::uniform(parse_presentation("gens: a; rels: a^6"));
    return std::vector<std::pair<std::string, Computed>>{
        {"B3 / (s1 s2)^3, s_i -> t", plain(alexander_polynomial(b3, opts).to_string())},
        {"<a | a^6>, a -> t", plain(alexander_polynomial(a6, opts).to_string())},
    };
  }));

  report.stages.push_back(run_stage(7, [&] {
    std::vector<std::pair<std::string, Computed>> out;
    for (const auto& check : curve_checks()) {
      if (check.name == "sextic in the chart x = 1") {
        const MultiPoly chart = parse_polynomial(check.computed);
        out.emplace_back(check.name,
                         Computed{check.computed, [chart](const std::string& expected) {
                                    return parse_polynomial(expected) == chart;
                                  }});
      } else {
        out.emplace_back(check.name, plain(check.computed));
      }
    }
    return out;
  }));

  report.overall = std::all_of(report.stages.begin(), report.stages.end(),
                               [](const PipelineStage& s) { return s.match; });
  return report;
}

std::string PipelineReport::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& s = stages[i];
    os << (s.match ? "PASS " : "FAIL ") << i + 1 << ". " << s.name << " (" << s.origin << ")\n";
    for (const auto& item : s.items) {
      os << "  " << (item.match ? "ok   " : "FAIL ") << item.label << '\n';
      if (!item.match) {
        os << "         expected: " << item.expected << '\n'
           << "         computed: " << item.computed << '\n';
      }
    }
  }
  os << "overall: " << (overall ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string PipelineReport::to_structured() const {
  json stages_json = json::array();
  for (const auto& s : stages) {
    json items = json::array();
    for (const auto& item : s.items) {
      items.push_back({{"label", item.label},
                       {"origin", item.origin},
                       {"expected", item.expected},
                       {"computed", item.computed},
                       {"match", item.match}});
    }
    stages_json.push_back({{"name", s.name},
                           {"origin", s.origin},
                           {"expected", s.expected},
                           {"computed", s.computed},
                           {"match", s.match},
                           {"items", items}});
  }
  const json out{{"stages", stages_json}, {"overall", overall}};
  return out.dump(2) + "\n";
}

}  // namespace zvk
