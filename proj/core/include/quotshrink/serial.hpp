#pragma once

#include <string>
#include <vector>

#include "quotshrink/perm_group.hpp"
#include "quotshrink/quotient_embed.hpp"

namespace quotshrink {

enum class Mode { kReduce, kReduceRadical, kMinDegree, kAnalyze, kVerify };

bool mode_needs_normal_generators(Mode mode);

// Problem description as read from disk. The JSON schema (version field
// schema: 1):
//   {"schema": 1, "degree": n, "generators": [cycles...],
//    "normal_generators": [cycles...]}
// The plain-text format: a "degree n" line, one generator per line, then an
// optional "normal" line followed by the normal subgroup generators; blank
// lines and lines starting with '#' are skipped.
struct ProblemInput {
  unsigned degree = 0;
  std::vector<std::string> generators;
  std::vector<std::string> normal_generators;
  Mode mode = Mode::kReduce;
};

ProblemInput parse_problem_json(const std::string& text, Mode mode);
std::vector<ProblemInput> parse_problem_batch_json(const std::string& text,
                                                   Mode mode);
ProblemInput parse_problem_txt(const std::string& text, Mode mode);
std::string emit_problem_json(const ProblemInput& input);

PermGroup build_group(const ProblemInput& input);
PermGroup build_normal_subgroup(const ProblemInput& input);

// Self-contained result document: embeds the input, the generator images,
// the degrees, the bound data and the derivation trace, so verification
// needs no external state. Schema (version field schema: 1):
//   {"schema": 1, "input": {...}, "images": [cycles...], "m": .., "n": ..,
//    "transitive": .., "bound_ok": .., "kernel_order": "..",
//    "trace": [steps...]}
struct Certificate {
  ProblemInput input;
  std::vector<std::string> images;
  unsigned m = 0;
  unsigned n = 0;
  bool transitive = false;
  bool bound_ok = false;
  std::string kernel_order;
  std::vector<TraceStep> trace;
};

Certificate make_certificate(const ProblemInput& input,
                             const QuotientRep& rep);
std::string emit_certificate_json(const Certificate& cert);
Certificate parse_certificate_json(const std::string& text);

// Re-derives the kernel and the bound from the document alone. Throws
// KernelMismatch when the images do not define a map with kernel exactly
// the stated normal subgroup, BoundMismatch when the degrees or bound data
// are inconsistent.
void verify_certificate(const Certificate& cert);

}  // namespace quotshrink
