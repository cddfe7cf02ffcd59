#pragma once

// End-to-end replay: braid monodromy -> lifted monodromy -> presentation ->
// patched group -> invariants, plus the curve checks, each diffed against
// expected values compiled in from data/reproduce_expected.json.

#include <optional>
#include <string>
#include <vector>

#include "zvk/execution.hpp"
#include "zvk/presentation.hpp"
#include "zvk/words.hpp"

namespace zvk {

struct RemovedFiber {
  Symbol generator;
  std::string label;
  BraidWord braid;
};

struct ReferenceInputs {
  std::vector<std::pair<std::string, BraidWord>> kept;
  std::vector<RemovedFiber> removed;
  Symbol g1;
  Symbol g2;
  Symbol fiber;
  std::vector<Exponent> ks;
};

/// The braid monodromies and patching data of the reference sextic.
ReferenceInputs reference_inputs();

/// Lifts every braid to F(p, q) and assembles the van Kampen presentation.
Presentation zvk_from_braids(const std::vector<BraidWord>& kept,
                             const std::vector<std::pair<Symbol, BraidWord>>& removed,
                             BraidConvention convention = BraidConvention::Standard);

/// <s1, s2 | s1 s2 s1 = s2 s1 s2, (s1 s2)^3>
Presentation torus_braid_quotient();

struct StageItem {
  std::string label;
  std::string origin;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct PipelineStage {
  std::string name;
  std::string origin;
  std::string expected;
  std::string computed;
  bool match = false;
  std::vector<StageItem> items;
};

struct PipelineReport {
  std::vector<PipelineStage> stages;
  bool overall = false;

  /// Human-readable table.
  std::string to_text() const;
  /// Deterministic JSON.
  std::string to_structured() const;
};

struct PipelineOptions {
  BraidConvention convention = BraidConvention::Standard;
  /// Patch parameters; defaults to the reference range.
  std::optional<std::vector<Exponent>> ks;
  Execution execution = Execution::Parallel;
};

/// Runs every stage; a stage that throws is recorded as a mismatch.
PipelineReport reproduce_paper(const PipelineOptions& options = {});

}  // namespace zvk
