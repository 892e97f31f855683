#include "popmax/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "popmax/certificates.hpp"
#include "popmax/cnf.hpp"
#include "popmax/errors.hpp"
#include "popmax/gstar.hpp"
#include "popmax/hardness.hpp"
#include "popmax/instance_io.hpp"
#include "popmax/lp.hpp"
#include "popmax/mincost.hpp"
#include "popmax/oracle.hpp"
#include "popmax/popularity.hpp"
#include "popmax/random_instance.hpp"

namespace popmax::cli {

namespace {

using nlohmann::json;

struct Reply {
  int code = kOk;
  std::string text;
  json result;
  json witness;  // null when absent
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw InputError("stdin ('-') can be read only once");
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

json certificate_json(const Instance& inst, const DualCertificate& cert) {
  json alpha = json::object();
  for (int a = 0; a < inst.num_a(); ++a) {
    if (cert.alpha_a[a]) alpha[inst.a_name(a)] = *cert.alpha_a[a];
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    if (cert.alpha_b[b]) alpha[inst.b_name(b)] = *cert.alpha_b[b];
  }
  return {{"alpha", alpha}, {"n0_prime", cert.n0_prime}};
}

json witness_json(const Instance& inst, const AlternatingWitness& w) {
  json edges = json::array();
  for (const Edge& e : w.edges()) edges.push_back({inst.a_name(e.a), inst.b_name(e.b)});
  const std::string text = format_witness(inst, w);
  return {{"kind", w.kind == AlternatingWitness::Kind::kCycle ? "cycle" : "path"},
          {"weight", w.weight},
          {"summary", text.substr(0, text.find('\n'))},
          {"edges", edges}};
}

json matchings_json(const Instance& inst, const std::vector<Matching>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(matching_to_json(inst, m));
  return arr;
}

std::string matchings_text(const Instance& inst, const std::vector<Matching>& ms) {
  std::string text;
  for (size_t i = 0; i < ms.size(); ++i) {
    text += "matching " + std::to_string(i + 1) + " cost " +
            std::to_string(matching_cost(inst, ms[i])) + "\n";
    text += format_matching(inst, ms[i]);
  }
  return text;
}

json report_json(const ReductionReport& r) {
  return {{"satisfiable", r.satisfiable},
          {"transformed_satisfiable", r.transformed_satisfiable},
          {"gadget_nodes", r.gadget_nodes},
          {"gadget_edges", r.gadget_edges},
          {"satisfying_assignments", r.satisfying_assignments},
          {"search_nodes", r.search_nodes},
          {"pareto_cost0", r.pareto_cost0},
          {"all_perfect", r.all_perfect},
          {"consistency", r.consistency},
          {"forward", r.forward},
          {"converse", r.converse},
          {"regressions", r.regressions},
          {"equivalence", r.equivalence},
          {"confirmed", r.ok()}};
}

const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kRejected: return "rejected";
    case kInputError: return "input-error";
    case kBoundExceeded: return "bound-exceeded";
    default: return "internal-error";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Popular max-matchings: solve, verify, certify, optimize."};
  app.name("popmax");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON envelope {status, result, witness}");

  Inputs inputs(in);
  std::function<Reply()> action;

  std::string file, match_file, cert_file, cnf_file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Instance file ('-' for stdin)")->required();
  };
  auto add_match = [&](CLI::App* sub) {
    sub->add_option("matching", match_file, "Matching file ('-' for stdin)")->required();
  };
  auto load = [&]() { return parse_instance(inputs.read(file)); };

  // solve
  std::string side = "A";
  auto* solve = app.add_subcommand("solve", "Popular max-matching via G*");
  add_file(solve);
  solve->add_option("--side", side, "Proposing side in G*")
      ->check(CLI::IsMember({"A", "B"}));
  solve->callback([&] {
    action = [&] {
      const Instance inst = load();
      const Matching m = popular_max_matching(inst, side == "A" ? Side::kA : Side::kB);
      return Reply{kOk, format_matching(inst, m), matching_to_json(inst, m), nullptr};
    };
  });

  // mincost
  auto* mincost = app.add_subcommand("mincost", "Minimum-cost popular max-matching");
  add_file(mincost);
  mincost->callback([&] {
    action = [&] {
      const Instance inst = load();
      const MinCostPopular r = min_cost_popular_max(inst);
      std::string text = format_matching(inst, r.matching);
      text += "cost " + std::to_string(r.cost) + "\n";
      text += format_certificate(inst, r.certificate);
      return Reply{kOk, text,
                   {{"matching", matching_to_json(inst, r.matching)},
                    {"cost", r.cost},
                    {"certificate", certificate_json(inst, r.certificate)}},
                   nullptr};
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Is a maximum matching popular?");
  add_file(verify);
  add_match(verify);
  verify->callback([&] {
    action = [&] {
      const Instance inst = load();
      const Matching m = parse_matching(inst, inputs.read(match_file));
      const PopularityVerdict v = verify_popular_max(inst, m);
      if (v.popular) return Reply{kOk, "popular\n", {{"popular", true}}, nullptr};
      return Reply{kRejected, format_witness(inst, *v.witness), {{"popular", false}},
                   witness_json(inst, *v.witness)};
    };
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Produce or check a dual certificate");
  add_file(certify);
  add_match(certify);
  certify->add_option("--cert", cert_file, "Certificate to check instead of producing one");
  certify->callback([&] {
    action = [&]() -> Reply {
      const Instance inst = load();
      const Matching m = parse_matching(inst, inputs.read(match_file));
      if (!cert_file.empty()) {
        const DualCertificate cert = parse_certificate(inst, m, inputs.read(cert_file));
        const CertificateReport report = verify_certificate(inst, m, cert);
        if (report.valid) return {kOk, "certificate verified\n", {{"valid", true}}, nullptr};
        std::string text;
        json violations = json::array();
        for (const auto& v : report.violations) {
          text += std::string("violation ") + check_code(v.check) + ": " + v.detail + "\n";
          violations.push_back({{"check", check_code(v.check)}, {"detail", v.detail}});
        }
        return {kRejected, text, {{"valid", false}}, violations};
      }
      const PopularityVerdict v = verify_popular_max(inst, m);
      if (!v.popular) {
        return {kRejected, format_witness(inst, *v.witness), {{"popular", false}},
                witness_json(inst, *v.witness)};
      }
      const DualCertificate cert = certify_popular_max(inst, m);
      return {kOk, format_certificate(inst, cert), certificate_json(inst, cert), nullptr};
    };
  });

  // pareto
  auto* pareto = app.add_subcommand("pareto", "Is a matching Pareto-optimal?");
  add_file(pareto);
  add_match(pareto);
  pareto->callback([&] {
    action = [&] {
      const Instance inst = load();
      const Matching m = parse_matching(inst, inputs.read(match_file));
      const ParetoVerdict v = is_pareto_optimal(inst, m);
      if (v.optimal) return Reply{kOk, "pareto-optimal\n", {{"pareto_optimal", true}}, nullptr};
      return Reply{kRejected, format_witness(inst, *v.witness),
                   {{"pareto_optimal", false}}, witness_json(inst, *v.witness)};
    };
  });

  // emit-lp
  bool integral = false;
  auto* emit = app.add_subcommand("emit-lp", "Extended formulation in CPLEX LP format");
  add_file(emit);
  emit->add_flag("--integral", integral, "Declare all variables integer");
  emit->callback([&] {
    action = [&] {
      const std::string lp = emit_lp(load(), {integral});
      return Reply{kOk, lp, {{"lp", lp}}, nullptr};
    };
  });

  // gstar
  auto* gstar = app.add_subcommand("gstar", "Serialize the auxiliary instance G*");
  add_file(gstar);
  gstar->callback([&] {
    action = [&] {
      const GStarInstance gs(load());
      const std::string text = serialize_instance(gs.inner());
      return Reply{kOk, text, {{"n0", gs.n0()}, {"instance", text}}, nullptr};
    };
  });

  // gen-random
  RandomInstanceOptions gen;
  auto* gen_random = app.add_subcommand("gen-random", "Random instance");
  gen_random->add_option("--na", gen.num_a, "Size of side A")->required()->check(CLI::NonNegativeNumber);
  gen_random->add_option("--nb", gen.num_b, "Size of side B")->required()->check(CLI::NonNegativeNumber);
  gen_random->add_option("--density", gen.density, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_random->add_option("--max-cost", gen.max_cost, "Costs uniform in [0, max]")->check(CLI::NonNegativeNumber);
  gen_random->callback([&] {
    action = [&] {
      const std::string text = serialize_instance(random_instance(gen));
      return Reply{kOk, text, {{"instance", text}}, nullptr};
    };
  });

  // gen-hardness
  auto* gen_hard = app.add_subcommand("gen-hardness", "Gadget instance of a CNF formula");
  gen_hard->add_option("cnf", cnf_file, "DIMACS file ('-' for stdin)")->required();
  gen_hard->callback([&] {
    action = [&] {
      const CnfFormula f = parse_dimacs(inputs.read(cnf_file));
      const GadgetInstance g = build_gadget_instance(transform_formula(normalize_formula(f)));
      const std::string text = serialize_instance(g.instance);
      return Reply{kOk, text, {{"instance", text}}, nullptr};
    };
  });

  // check-reduction
  auto* check = app.add_subcommand("check-reduction", "Exhaustively check the reduction");
  check->add_option("cnf", cnf_file, "DIMACS file ('-' for stdin)")->required();
  check->callback([&] {
    action = [&] {
      const ReductionReport r = check_reduction(parse_dimacs(inputs.read(cnf_file)));
      return Reply{r.ok() ? kOk : kRejected, format_report(r), report_json(r), nullptr};
    };
  });

  // oracle
  int bound = oracle::kDefaultEdgeBound;
  auto* orc = app.add_subcommand("oracle", "Exhaustive ground truth (exponential)");
  orc->require_subcommand(1);
  orc->add_option("--bound", bound, "Maximum number of edges")->check(CLI::NonNegativeNumber);
  auto add_oracle = [&](const std::string& name, const std::string& help, bool needs_matching,
                        std::function<Reply(const Instance&, const Matching*)> body) {
    auto* sub = orc->add_subcommand(name, help);
    add_file(sub);
    if (needs_matching) add_match(sub);
    sub->callback([&, needs_matching, body] {
      action = [&, needs_matching, body] {
        const Instance inst = load();
        if (!needs_matching) return body(inst, nullptr);
        const Matching m = parse_matching(inst, inputs.read(match_file));
        return body(inst, &m);
      };
    });
  };
  add_oracle("popular", "All popular max-matchings", false, [&](const Instance& inst, const Matching*) {
    const auto ms = oracle::brute_popular_max(inst, bound);
    return Reply{kOk, matchings_text(inst, ms), matchings_json(inst, ms), nullptr};
  });
  add_oracle("mincost", "Cheapest popular max-matching", false, [&](const Instance& inst, const Matching*) {
    const auto r = oracle::brute_min_cost_popular_max(inst, bound);
    return Reply{kOk, format_matching(inst, r.matching) + "cost " + std::to_string(r.cost) + "\n",
                 matching_to_json(inst, r.matching), nullptr};
  });
  add_oracle("stable", "All stable matchings", false, [&](const Instance& inst, const Matching*) {
    const auto ms = oracle::brute_stable_matchings(inst, bound);
    return Reply{kOk, matchings_text(inst, ms), matchings_json(inst, ms), nullptr};
  });
  add_oracle("unpopularity", "Unpopularity factor of a matching", true,
             [&](const Instance& inst, const Matching* m) {
               const auto u = oracle::brute_unpopularity_factor(inst, *m, bound);
               return Reply{kOk, "unpopularity " + u.to_string() + "\n",
                            {{"unpopularity", u.to_string()}}, nullptr};
             });
  add_oracle("count", "Numbers of matchings of each kind", false, [&](const Instance& inst, const Matching*) {
    const auto all = oracle::enum_matchings(inst, bound);
    const auto maxes = oracle::enum_max_matchings(inst, bound);
    const auto popular = oracle::brute_popular_max(inst, bound);
    const auto stable = oracle::brute_stable_matchings(inst, bound);
    std::ostringstream text;
    text << "matchings " << all.size() << "\nmaximum " << maxes.size() << "\npopular-max "
         << popular.size() << "\nstable " << stable.size() << "\n";
    return Reply{kOk, text.str(),
                 {{"matchings", all.size()},
                  {"maximum", maxes.size()},
                  {"popular_max", popular.size()},
                  {"stable", stable.size()}},
                 nullptr};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Reply reply;
  std::string message;
  try {
    reply = action();
  } catch (const InputError& e) {
    reply.code = kInputError;
    message = e.what();
  } catch (const BoundExceeded& e) {
    reply.code = kBoundExceeded;
    message = e.what();
  } catch (const std::exception& e) {
    reply.code = kInternalError;
    message = std::string("internal error: ") + e.what();
  }
  if (!message.empty()) err << "popmax: " << message << '\n';

  if (as_json) {
    json envelope = {{"status", status_name(reply.code)}, {"result", reply.result}};
    if (!reply.witness.is_null()) envelope["witness"] = reply.witness;
    if (!message.empty()) envelope["error"] = message;
    out << envelope.dump(2) << '\n';
  } else {
    out << reply.text;
  }
  return reply.code;
}

}  // namespace popmax::cli
