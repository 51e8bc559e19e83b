#include "quotshrink/serial.hpp"

#include <sstream>

#include <json.hpp>

#include "quotshrink/errors.hpp"

namespace quotshrink {

namespace {

using nlohmann::json;

json problem_to_json(const ProblemInput& input) {
  json j;
  j["schema"] = 1;
  j["degree"] = input.degree;
  j["generators"] = input.generators;
  j["normal_generators"] = input.normal_generators;
  return j;
}

ProblemInput problem_from_json(const json& j, Mode mode) {
  ProblemInput input;
  input.mode = mode;
  try {
    if (j.value("schema", 0) != 1)
      throw MalformedInput("unsupported schema version");
    input.degree = j.at("degree").get<unsigned>();
    input.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("normal_generators"))
      input.normal_generators =
          j.at("normal_generators").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("problem document: ") + e.what());
  }
  if (input.degree == 0) throw MalformedInput("degree must be at least 1");
  if (mode_needs_normal_generators(mode) && input.normal_generators.empty())
    throw MalformedInput("this mode needs normal_generators");
  if (!mode_needs_normal_generators(mode) && !input.normal_generators.empty())
    throw MalformedInput("this mode takes no normal_generators");
  return input;
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json steps = json::array();
  for (const TraceStep& s : trace) {
    json j;
    j["action"] = s.action;
    j["detail"] = s.detail;
    j["degree_before"] = s.degree_before;
    j["degree_after"] = s.degree_after;
    j["points"] = s.points;
    j["perms"] = s.perms;
    j["choice"] = s.choice;
    steps.push_back(std::move(j));
  }
  return steps;
}

std::vector<TraceStep> trace_from_json(const json& steps) {
  std::vector<TraceStep> trace;
  for (const json& j : steps) {
    TraceStep s;
    s.action = j.at("action").get<std::string>();
    s.detail = j.value("detail", "");
    s.degree_before = j.value("degree_before", 0u);
    s.degree_after = j.value("degree_after", 0u);
    if (j.contains("points"))
      s.points = j.at("points").get<std::vector<unsigned>>();
    if (j.contains("perms"))
      s.perms = j.at("perms").get<std::vector<std::string>>();
    s.choice = j.value("choice", "");
    trace.push_back(std::move(s));
  }
  return trace;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

bool mode_needs_normal_generators(Mode mode) {
  switch (mode) {
    case Mode::kReduce:
    case Mode::kReduceRadical:
    case Mode::kAnalyze:
    case Mode::kVerify:
      return true;
    case Mode::kMinDegree:
      return false;
  }
  return false;
}

ProblemInput parse_problem_json(const std::string& text, Mode mode) {
  return problem_from_json(parse_text(text), mode);
}

std::vector<ProblemInput> parse_problem_batch_json(const std::string& text,
                                                   Mode mode) {
  json j = parse_text(text);
  if (!j.is_array()) throw MalformedInput("batch input must be a JSON array");
  std::vector<ProblemInput> problems;
  for (const json& item : j) problems.push_back(problem_from_json(item, mode));
  return problems;
}

ProblemInput parse_problem_txt(const std::string& text, Mode mode) {
  ProblemInput input;
  input.mode = mode;
  std::istringstream in(text);
  std::string line;
  bool have_degree = false, in_normal = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.empty() || line[0] == '#') continue;
    if (!have_degree) {
      if (line.rfind("degree", 0) != 0)
        throw MalformedInput("text input must start with a 'degree n' line");
      try {
        input.degree = static_cast<unsigned>(std::stoul(line.substr(6)));
      } catch (const std::exception&) {
        throw MalformedInput("unreadable degree line: " + line);
      }
      have_degree = true;
      continue;
    }
    if (line == "normal") {
      in_normal = true;
      continue;
    }
    (in_normal ? input.normal_generators : input.generators).push_back(line);
  }
  if (!have_degree) throw MalformedInput("text input is empty");
  if (input.degree == 0) throw MalformedInput("degree must be at least 1");
  if (mode_needs_normal_generators(mode) && input.normal_generators.empty())
    throw MalformedInput("this mode needs a 'normal' section");
  return input;
}

std::string emit_problem_json(const ProblemInput& input) {
  return problem_to_json(input).dump(2);
}

PermGroup build_group(const ProblemInput& input) {
  std::vector<Perm> gens;
  gens.reserve(input.generators.size());
  for (const std::string& text : input.generators)
    gens.push_back(parse_cycles(text, input.degree));
  return PermGroup(input.degree, std::move(gens));
}

PermGroup build_normal_subgroup(const ProblemInput& input) {
  std::vector<Perm> gens;
  gens.reserve(input.normal_generators.size());
  for (const std::string& text : input.normal_generators)
    gens.push_back(parse_cycles(text, input.degree));
  return PermGroup(input.degree, std::move(gens));
}

Certificate make_certificate(const ProblemInput& input,
                             const QuotientRep& rep) {
  Certificate cert;
  cert.input = input;
  for (const Perm& image : rep.rho.gen_images())
    cert.images.push_back(format_cycles(image));
  cert.m = rep.m;
  cert.n = rep.n;
  cert.transitive = rep.bound_certificate.transitive;
  cert.bound_ok = rep.bound_certificate.satisfied;
  cert.kernel_order = rep.kernel_certificate.kernel_order.str();
  cert.trace = rep.trace;
  return cert;
}

std::string emit_certificate_json(const Certificate& cert) {
  json j;
  j["schema"] = 1;
  j["input"] = problem_to_json(cert.input);
  j["images"] = cert.images;
  j["m"] = cert.m;
  j["n"] = cert.n;
  j["transitive"] = cert.transitive;
  j["bound_ok"] = cert.bound_ok;
  j["kernel_order"] = cert.kernel_order;
  j["trace"] = trace_to_json(cert.trace);
  return j.dump(2);
}

Certificate parse_certificate_json(const std::string& text) {
  json j = parse_text(text);
  Certificate cert;
  try {
    if (j.value("schema", 0) != 1)
      throw MalformedInput("unsupported certificate schema version");
    cert.input = problem_from_json(j.at("input"), Mode::kVerify);
    cert.images = j.at("images").get<std::vector<std::string>>();
    cert.m = j.at("m").get<unsigned>();
    cert.n = j.at("n").get<unsigned>();
    cert.transitive = j.at("transitive").get<bool>();
    cert.bound_ok = j.at("bound_ok").get<bool>();
    cert.kernel_order = j.at("kernel_order").get<std::string>();
    cert.trace = trace_from_json(j.at("trace"));
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("certificate document: ") + e.what());
  }
  return cert;
}

void verify_certificate(const Certificate& cert) {
  PermGroup g = build_group(cert.input);
  PermGroup n = build_normal_subgroup(cert.input);
  if (cert.n != g.degree())
    throw BoundMismatch("stated n differs from the input degree");
  if (cert.m == 0) throw BoundMismatch("stated degree m must be positive");
  if (cert.images.size() != g.generators().size())
    throw KernelMismatch("one image per input generator is required");
  if (!is_normal(n, g))
    throw KernelMismatch("the claimed kernel is not a normal subgroup");

  std::vector<Perm> images;
  images.reserve(cert.images.size());
  for (const std::string& text : cert.images) {
    try {
      images.push_back(parse_cycles(text, cert.m));
    } catch (const PointOutOfRange&) {
      throw BoundMismatch("generator images do not fit the claimed degree");
    }
  }

  GroupHom rho = [&] {
    try {
      return GroupHom(g, cert.m, std::move(images));
    } catch (const NotAHomomorphism&) {
      throw KernelMismatch("the images do not define a homomorphism");
    }
  }();

  for (const Perm& x : n.generators())
    if (!rho.apply(x).is_identity())
      throw KernelMismatch("the normal subgroup does not map to the identity");
  if (rho.kernel_order() != n.order())
    throw KernelMismatch("kernel order " + rho.kernel_order().str() +
                         " differs from the subgroup order " +
                         n.order().str());
  if (Order(cert.kernel_order) != n.order())
    throw KernelMismatch("stated kernel order differs from the subgroup");

  bool transitive = g.is_transitive();
  if (transitive != cert.transitive)
    throw BoundMismatch("stated transitivity flag is wrong");
  bool satisfied =
      transitive ? 5u * cert.m <= 2u * cert.n : cert.m < cert.n;
  if (!satisfied || !cert.bound_ok)
    throw BoundMismatch("degree bound does not verify for m = " +
                        std::to_string(cert.m));
}

}  // namespace quotshrink
