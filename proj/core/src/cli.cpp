#include "quotshrink/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quotshrink/errors.hpp"
#include "quotshrink/mindeg.hpp"
#include "quotshrink/quotient_embed.hpp"
#include "quotshrink/serial.hpp"
#include "quotshrink/standard_groups.hpp"
#include "quotshrink/wreath.hpp"

namespace quotshrink {

namespace {

std::size_t order_cap_from_env() {
  const char* value = std::getenv("QUOTSHRINK_ORDER_CAP");
  if (value == nullptr || *value == '\0') return kDefaultOrderCap;
  try {
    long long cap = std::stoll(value);
    if (cap < 1) throw std::invalid_argument("nonpositive");
    return static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    throw MalformedInput(std::string("QUOTSHRINK_ORDER_CAP: unreadable value '") +
                         value + "'");
  }
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open input file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemInput parse_single(const std::string& text, const std::string& format,
                          Mode mode) {
  if (format == "txt") return parse_problem_txt(text, mode);
  if (format == "json") return parse_problem_json(text, mode);
  throw MalformedInput("unknown input format '" + format + "'");
}

void print_human_trace(std::ostream& out, const std::vector<TraceStep>& trace) {
  out << "trace:\n";
  for (const TraceStep& step : trace) {
    out << "  " << step.action << " [" << step.degree_before << " -> "
        << step.degree_after << "]";
    if (!step.choice.empty()) out << " via " << step.choice;
    if (!step.detail.empty()) out << ": " << step.detail;
    out << "\n";
  }
}

void print_reduction(std::ostream& out, const ProblemInput& input,
                     const QuotientRep& rep, bool with_trace) {
  out << "reduced degree: " << rep.n << " -> " << rep.m << " (bound "
      << rep.bound_certificate.bound_kind << " satisfied)\n";
  out << "kernel order: " << rep.kernel_certificate.kernel_order.str()
      << " (matches the normal subgroup)\n";
  out << "generator images:\n";
  for (std::size_t i = 0; i < input.generators.size(); ++i)
    out << "  " << input.generators[i] << " -> "
        << format_cycles(rep.rho.gen_images()[i]) << "\n";
  if (with_trace) print_human_trace(out, rep.trace);
}

int run_reduce(const std::string& source, const std::string& format,
               bool as_json, bool with_trace, bool batch, bool radical,
               std::ostream& out) {
  std::size_t cap = order_cap_from_env();
  auto reduce_one = [&](const PermGroup& g, const PermGroup& n) {
    return radical ? embed_quotient_radical(g, n, cap)
                   : embed_quotient(g, n, cap);
  };

  Mode mode = radical ? Mode::kReduceRadical : Mode::kReduce;
  if (batch) {
    auto problems = parse_problem_batch_json(read_source(source), mode);
    if (as_json) out << "[\n";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      PermGroup g = build_group(problems[i]);
      PermGroup n = build_normal_subgroup(problems[i]);
      QuotientRep rep = reduce_one(g, n);
      if (as_json) {
        std::istringstream doc(
            emit_certificate_json(make_certificate(problems[i], rep)));
        std::string line;
        while (std::getline(doc, line)) out << "  " << line << "\n";
        if (i + 1 < problems.size()) out << ",\n";
      } else {
        out << "# problem " << (i + 1) << "\n";
        print_reduction(out, problems[i], rep, with_trace);
      }
    }
    if (as_json) out << "]\n";
    return 0;
  }

  ProblemInput input = parse_single(read_source(source), format, mode);
  PermGroup g = build_group(input);
  PermGroup n = build_normal_subgroup(input);
  QuotientRep rep = reduce_one(g, n);
  if (as_json)
    out << emit_certificate_json(make_certificate(input, rep)) << "\n";
  else
    print_reduction(out, input, rep, with_trace);
  return 0;
}

int run_min_degree(const std::string& source, const std::string& format,
                   bool as_json, std::ostream& out) {
  std::size_t cap = order_cap_from_env();
  ProblemInput input =
      parse_single(read_source(source), format, Mode::kMinDegree);
  PermGroup g = build_group(input);
  MinDegResult result = min_faithful_rep(g, cap);
  if (as_json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["input"] = nlohmann::json::parse(emit_problem_json(input));
    j["min_degree"] = result.degree;
    std::vector<std::string> witness;
    for (const Perm& image : result.witness.gen_images())
      witness.push_back(format_cycles(image));
    j["witness"] = witness;
    std::vector<std::string> family;
    for (const PermGroup& h : result.subgroup_family)
      family.push_back(h.order().str());
    j["family_orders"] = family;
    out << j.dump(2) << "\n";
  } else {
    out << "group order: " << g.order().str() << "\n";
    out << "minimal faithful degree: " << result.degree << "\n";
    out << "witness subgroup family orders:";
    for (const PermGroup& h : result.subgroup_family)
      out << " " << h.order().str();
    out << "\n";
    out << "witness generator images:\n";
    for (std::size_t i = 0; i < input.generators.size(); ++i)
      out << "  " << input.generators[i] << " -> "
          << format_cycles(result.witness.gen_images()[i]) << "\n";
  }
  return 0;
}

int run_analyze(const std::string& source, const std::string& format,
                bool as_json, std::ostream& out) {
  std::size_t cap = order_cap_from_env();
  ProblemInput input = parse_single(read_source(source), format,
                                    Mode::kAnalyze);
  PermGroup g = build_group(input);
  PermGroup n = build_normal_subgroup(input);

  nlohmann::json j;
  j["schema"] = 1;
  j["degree"] = g.degree();
  j["group_order"] = g.order().str();
  j["transitive"] = g.is_transitive();
  std::vector<std::size_t> orbit_sizes;
  for (const auto& orbit : g.orbits()) orbit_sizes.push_back(orbit.size());
  j["orbit_sizes"] = orbit_sizes;
  j["normal_order"] = n.order().str();
  bool normal = is_normal(n, g);
  j["normal"] = normal;
  if (normal) {
    j["minimal_normal"] = is_minimal_normal(g, n, cap);
    std::vector<std::size_t> block_sizes;
    for (const auto& orbit : n.orbits()) block_sizes.push_back(orbit.size());
    j["n_orbit_sizes"] = block_sizes;
    j["centralizer_order"] = centralizer(g, n).order().str();
    try {
      SocleDecomposition dec = socle_decomposition(g, n, cap);
      std::vector<std::string> factor_orders;
      for (const PermGroup& f : dec.factors)
        factor_orders.push_back(f.order().str());
      j["semisimple"] = true;
      j["factor_orders"] = factor_orders;
      j["factor_action_transitive"] = dec.factor_action.image().is_transitive();
      InducedT it = induced_T(g, dec, cap);
      j["t_order"] = it.t_rep.order().str();
      j["t_over_socle"] = Order(it.t_rep.order() / it.t_socle_image.order()).str();
    } catch (const NotSemisimple&) {
      j["semisimple"] = false;
    }
  }
  if (as_json) {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "degree: " << g.degree() << ", order: " << g.order().str()
      << ", transitive: " << (g.is_transitive() ? "yes" : "no") << "\n";
  out << "orbit sizes:";
  for (std::size_t s : orbit_sizes) out << " " << s;
  out << "\n";
  out << "normal subgroup order: " << n.order().str() << ", normal: "
      << (normal ? "yes" : "no") << "\n";
  if (normal) {
    out << "minimal normal: " << (j["minimal_normal"].get<bool>() ? "yes" : "no")
        << ", centralizer order: " << j["centralizer_order"].get<std::string>()
        << "\n";
    out << "orbits of the subgroup:";
    for (const auto& size : j["n_orbit_sizes"]) out << " " << size;
    out << "\n";
    if (j["semisimple"].get<bool>()) {
      out << "simple factors:";
      for (const auto& order : j["factor_orders"])
        out << " " << order.get<std::string>();
      out << " (factor action "
          << (j["factor_action_transitive"].get<bool>() ? "transitive" : "intransitive") << ")\n";
      out << "T = N_G(S)/C_G(S): order " << j["t_order"].get<std::string>()
          << ", |T/S| = " << j["t_over_socle"].get<std::string>() << "\n";
    } else {
      out << "the subgroup is not a product of nonabelian simple groups\n";
    }
  }
  return 0;
}

int run_verify(const std::string& source, std::ostream& out) {
  Certificate cert = parse_certificate_json(read_source(source));
  verify_certificate(cert);
  out << "certificate verifies: degree " << cert.n << " -> " << cert.m
      << ", kernel order " << cert.kernel_order << "\n";
  return 0;
}

int run_selftest(std::ostream& out) {
  struct Suite {
    std::string name;
    bool ok;
  };
  std::vector<Suite> suites;
  auto run = [&](const std::string& name, auto&& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
      ok = false;
    }
    suites.push_back({name, ok});
  };

  run("permutation algebra", [] {
    Perm p = parse_cycles("(1 2 3)(4 5)", 5);
    if (parse_cycles(format_cycles(p), 5) != p) return false;
    if (!compose(p, inverse(p)).is_identity()) return false;
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
      std::vector<unsigned> a{1, 2, 3, 4, 5, 6}, b = a, c = a;
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      std::shuffle(c.begin(), c.end(), rng);
      Perm x{a}, y{b}, z{c};
      if (compose(compose(x, y), z) != compose(x, compose(y, z))) return false;
    }
    return true;
  });

  run("stabilizer chains", [] {
    if (symmetric_group(5).order() != 120) return false;
    if (alternating_group(5).order() != 60) return false;
    if (psl2(7).order() != 168) return false;
    PermGroup a5 = alternating_group(5);
    return Order(a5.orbit(1).size()) * a5.stabilizer(1).order() == a5.order();
  });

  run("subdirect normalizer lemma", [] {
    PermGroup n = direct_product(alternating_group(5), alternating_group(5));
    SocleDecomposition dec = socle_decomposition(n, n);
    PermGroup a5 = alternating_group(5);
    std::vector<Perm> diag;
    for (const Perm& s : a5.generators()) {
      std::vector<unsigned> im(10);
      for (unsigned i = 1; i <= 5; ++i) {
        im[i - 1] = s[i];
        im[i + 4] = s[i] + 5;
      }
      diag.emplace_back(std::move(im));
    }
    return check_normsd(dec, PermGroup(10, std::move(diag)));
  });

  run("factor containment lemma", [] {
    PermGroup k = shifted_group(cyclic_group(2), 10, 12);
    PermGroup n = shifted_group(
        direct_product(alternating_group(5), alternating_group(5)), 0, 12);
    std::vector<Perm> ambient_gens = k.generators();
    for (const Perm& x : n.generators()) ambient_gens.push_back(x);
    PermGroup ambient(12, ambient_gens);
    std::vector<Perm> l_gens = k.generators();
    for (const Perm& x : shifted_group(alternating_group(5), 0, 12).generators())
      l_gens.push_back(x);
    PermGroup l(12, l_gens);
    auto hit = check_ntproj(ambient, k, n, l);
    return hit == std::vector<std::size_t>{0};
  });

  run("product action fixed set", [] {
    auto w = wreath_product_action(symmetric_group(2), symmetric_group(3));
    return prodact_v_orbit(w, 1, 2).size() == 3;
  });

  run("product action formula", [] {
    auto w = wreath_product_action(symmetric_group(2), symmetric_group(3));
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
      std::vector<unsigned> vim{1, 2, 3};
      std::shuffle(vim.begin(), vim.end(), rng);
      Perm v{vim};
      std::vector<Perm> f;
      for (int c = 0; c < 3; ++c) {
        std::vector<unsigned> uim{1, 2};
        std::shuffle(uim.begin(), uim.end(), rng);
        f.emplace_back(uim);
      }
      Perm action = product_action_perm(w.labeling, f, v);
      Perm vinv = inverse(v);
      for (unsigned pt = 1; pt <= 8; ++pt) {
        auto phi = w.labeling.function_decode(pt);
        auto img = w.labeling.function_decode(action[pt]);
        for (unsigned gamma = 1; gamma <= 3; ++gamma) {
          unsigned src = vinv[gamma];
          if (img[gamma - 1] != f[src - 1][phi[src - 1]]) return false;
        }
      }
    }
    return true;
  });

  run("minimal degree spot values", [] {
    return min_faithful_rep(cyclic_group(2)).degree == 2 &&
           min_faithful_rep(klein_four_group()).degree == 4 &&
           min_faithful_rep(dihedral_group(4)).degree == 4 &&
           min_faithful_rep(cyclic_group(6)).degree == 5;
  });

  run("tight reduction examples", [] {
    auto rep = embed_quotient(symmetric_group(5), alternating_group(5));
    if (rep.m != 2) return false;
    auto w = wreath_imprimitive(symmetric_group(5), symmetric_group(2));
    PermGroup n = direct_product(alternating_group(5), alternating_group(5));
    return embed_quotient(w.group, n).m == 4;
  });

  bool all_ok = true;
  for (const Suite& suite : suites) {
    out << suite.name;
    for (std::size_t pad = suite.name.size(); pad < 36; ++pad) out << ' ';
    out << (suite.ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && suite.ok;
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"faithful permutation representations of quotients by "
               "semisimple normal subgroups"};
  app.require_subcommand(1);

  std::string source = "-";
  std::string format = "json";
  std::string batch_file;
  bool as_json = false;
  bool with_trace = false;

  auto add_input_options = [&](CLI::App* cmd, bool with_batch) {
    cmd->add_option("input", source, "input file, or - for stdin");
    cmd->add_option("--format", format, "input format: json or txt")
        ->check(CLI::IsMember({"json", "txt"}));
    cmd->add_flag("--json", as_json, "machine-readable JSON output");
    if (with_batch)
      cmd->add_option("--batch", batch_file,
                      "JSON array of problems, processed in order");
  };

  CLI::App* reduce = app.add_subcommand(
      "reduce", "embed G/N for a nonabelian minimal normal subgroup N");
  add_input_options(reduce, true);
  reduce->add_flag("--trace", with_trace, "print the derivation trace");

  CLI::App* radical = app.add_subcommand(
      "reduce-radical",
      "embed G/N for N normal with nonabelian composition factors");
  add_input_options(radical, true);
  radical->add_flag("--trace", with_trace, "print the derivation trace");

  CLI::App* mindeg = app.add_subcommand(
      "min-degree", "exact minimal faithful permutation degree");
  add_input_options(mindeg, false);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "orbits, blocks, socle structure and minimal normality");
  add_input_options(analyze, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "re-check a previously emitted reduction certificate");
  verify->add_option("input", source, "certificate file, or - for stdin");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the built-in property suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's machinery
      std::ostringstream help;
      int code = app.exit(e, out, err);
      return code;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (reduce->parsed() || radical->parsed()) {
      bool is_radical = radical->parsed();
      bool batch = !batch_file.empty();
      return run_reduce(batch ? batch_file : source, format, as_json,
                        with_trace, batch, is_radical, out);
    }
    if (mindeg->parsed()) return run_min_degree(source, format, as_json, out);
    if (analyze->parsed()) return run_analyze(source, format, as_json, out);
    if (verify->parsed()) return run_verify(source, out);
    if (selftest->parsed()) return run_selftest(out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const InvariantError& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace quotshrink
