#include "demorgan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "demorgan/congruence.hpp"
#include "demorgan/duality.hpp"
#include "demorgan/generator.hpp"

namespace demorgan::cli {

namespace {

struct InstanceResult {
  Json row;
  bool agree = true;
  bool cep = true;
  bool perfect = false;
};

InstanceResult check_instance(const DualSpace& x, std::size_t index, const Limits& limits) {
  const auto m = algebra_of(x, limits);
  const auto perfect = is_perfect_extension(m, limits);
  const auto decomposition = decompose(m, limits);
  const auto c3 = condition3_holds(x);

  InstanceResult r;
  r.perfect = perfect.perfect;
  r.cep = perfect.cep_holds;
  r.agree = perfect.perfect == c3.holds && c3.holds == decomposition.ok();
  r.row["index"] = index;
  r.row["points"] = x.size();
  r.row["algebra_size"] = m.size();
  r.row["cond1"] = perfect.perfect;
  r.row["cond2"] = decomposition.ok();
  r.row["cond3"] = c3.holds;
  r.row["cep"] = perfect.cep_holds;
  if (c3.violation) {
    // The constructive certificate of non-perfectness.
    const auto [alpha, beta] =
        congruence_witnesses_from_violation(x, c3.violation->first, c3.violation->second, limits);
    const auto sk = skeleton(m);
    const bool certified = alpha != beta && restrict(alpha, sk) == restrict(beta, sk) &&
                           is_compatible(m, alpha) && is_compatible(m, beta);
    r.row["certificate"] = certified;
    r.agree = r.agree && certified;
  }
  r.row["agree"] = r.agree;
  return r;
}

}  // namespace

TheoremRun verify_theorem(std::size_t max_points, std::size_t jobs, const Limits& limits) {
  const auto duals = enumerate_dual_spaces(max_points, limits);
  std::vector<InstanceResult> results(duals.size());
  std::vector<std::exception_ptr> errors(duals.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < duals.size(); i = next++) {
      try {
        results[i] = check_instance(duals[i], i, limits);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, 256);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TheoremRun run;
  Json rows = Json::array();
  std::size_t agree = 0, perfect = 0, cep_failures = 0;
  for (auto& r : results) {
    agree += r.agree ? 1 : 0;
    perfect += r.perfect ? 1 : 0;
    cep_failures += r.cep ? 0 : 1;
    rows.push_back(std::move(r.row));
  }
  run.all_agree = agree == results.size();
  run.cep_everywhere = cep_failures == 0;
  run.report["max_points"] = max_points;
  run.report["instances"] = std::move(rows);
  Json summary;
  summary["instances"] = results.size();
  summary["agree"] = agree;
  summary["disagree"] = results.size() - agree;
  summary["perfect"] = perfect;
  summary["cep_failures"] = cep_failures;
  summary["ok"] = run.all_agree && run.cep_everywhere;
  run.report["summary"] = std::move(summary);
  return run;
}

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success, or the checked property holds\n"
    "  1  the property is false; a witness is printed\n"
    "  2  input error (unreadable file, malformed JSON, invalid structure)\n"
    "  3  size limit exceeded\n";

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Json read(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(path);
      if (!file) throw InputError("cannot read " + path);
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return parse_json(text);
  }

  int emit(const Json& j, int code) {
    out_ << j.dump(2) << '\n';
    return code;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

Json error_json(const std::string& message, int code) {
  Json j;
  j["error"] = message;
  j["exit_code"] = code;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Session session(in, out);
  Limits limits;
  std::string file = "-";

  CLI::App app{"Finite de Morgan algebras: skeletons, congruences, natural duals and "
               "perfect extensions of the Boolean skeleton."};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  app.add_option("--max-size", limits.max_size, "largest algebra carrier accepted")
      ->capture_default_str();
  app.add_option("--bell-cap", limits.bell_cap, "largest carrier for partition enumeration")
      ->capture_default_str();

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "input JSON file, or - for standard input")->required();
    return sub;
  };
  auto* validate = with_file("validate", "validate an algebra");
  auto* skeleton_cmd = with_file("skeleton", "Boolean skeleton of an algebra");
  auto* congruences = with_file("congruences", "congruence lattice of an algebra");
  bool oracle = false;
  congruences->add_flag("--oracle", oracle,
                        "also enumerate all partitions and fail on disagreement");
  auto* dual = with_file("dual", "dual space of an algebra");
  auto* primal = with_file("primal", "algebra of a dual space");
  auto* check_perfect = with_file("check-perfect", "is the algebra a perfect extension of its skeleton");
  auto* check_cond3 = with_file("check-cond3", "dual-space condition on a dual space");
  auto* decompose_cmd = with_file("decompose", "factor an algebra into B2, K3 and M1");
  auto* classify_cmd = with_file("classify", "Boolean / Kleene / de Morgan tags");

  std::size_t max_points = 4;
  std::uint64_t seed = 0;
  std::size_t random_count = 0;
  bool no_named = false;
  auto* generate = app.add_subcommand("generate", "emit a corpus manifest");
  generate->add_option("--max-points", max_points, "largest enumerated dual space")
      ->capture_default_str();
  generate->add_option("--seed", seed, "seed for random instances")->capture_default_str();
  generate->add_option("--random", random_count, "number of random instances")
      ->capture_default_str();
  generate->add_flag("--no-named", no_named, "omit the named algebras");

  std::size_t jobs = 1;
  auto* verify = app.add_subcommand("verify-theorem",
                                    "check perfectness, decomposability and the dual-space "
                                    "condition agree on every small dual space");
  verify->add_option("--max-points", max_points, "largest enumerated dual space")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return session.emit(error_json(e.what(), kInputError), kInputError);
  }

  try {
    if (validate->parsed()) {
      auto result = validate_algebra(algebra_tables_from_json(session.read(file)));
      Json j;
      j["valid"] = result.ok();
      if (result.ok()) {
        j["algebra"] = to_json(*result.algebra);
      } else {
        j["violations"] = to_json(result.violations);
      }
      return session.emit(j, result.ok() ? kSuccess : kPropertyFalse);
    }
    if (skeleton_cmd->parsed()) {
      return session.emit(to_json(skeleton(algebra_from_json(session.read(file)))), kSuccess);
    }
    if (congruences->parsed()) {
      const auto m = algebra_from_json(session.read(file));
      auto con = all_congruences(m, limits);
      if (oracle) {
        auto brute = brute_force_congruences(m, limits);
        if (brute != con) {
          Json j;
          j["error"] = "congruence oracle disagreement";
          j["principal_join"] = to_json(con);
          j["brute_force"] = to_json(brute);
          return session.emit(j, kPropertyFalse);
        }
      }
      return session.emit(to_json(con), kSuccess);
    }
    if (dual->parsed()) {
      const auto m = algebra_from_json(session.read(file));
      if (m.size() > limits.max_size) throw SizeLimitError("dual", m.size(), limits.max_size);
      return session.emit(to_json(dual_space(m).space), kSuccess);
    }
    if (primal->parsed()) {
      return session.emit(to_json(algebra_of(dual_space_from_json(session.read(file)), limits)),
                          kSuccess);
    }
    if (check_perfect->parsed()) {
      const auto result = is_perfect_extension(algebra_from_json(session.read(file)), limits);
      Json j;
      j["perfect"] = result.perfect;
      j["cep"] = result.cep_holds;
      j["irregular_fibers"] = result.irregular_fibers;
      j["report"] = to_json(result.report);
      if (!result.cep_holds) {
        return session.emit(error_json("internal: a skeleton congruence has no extension", 1),
                            kPropertyFalse);
      }
      return session.emit(j, result.perfect ? kSuccess : kPropertyFalse);
    }
    if (check_cond3->parsed()) {
      const auto result = condition3_holds(dual_space_from_json(session.read(file)));
      Json j;
      j["holds"] = result.holds;
      j["violation"] = result.violation
                           ? Json::array({result.violation->first, result.violation->second})
                           : Json(nullptr);
      return session.emit(j, result.holds ? kSuccess : kPropertyFalse);
    }
    if (decompose_cmd->parsed()) {
      const auto m = algebra_from_json(session.read(file));
      const auto result = decompose(m, limits);
      Json j;
      j["decomposable"] = result.ok();
      if (result.ok()) {
        j["decomposition"] = to_json(*result.decomposition);
        return session.emit(j, kSuccess);
      }
      const auto [p, q] = *result.violation;
      j["violation"] = Json::array({p, q});
      j["dual_space"] = to_json(result.dual.space);
      const auto [alpha, beta] = congruence_witnesses_from_violation(m, result.dual, p, q);
      const auto sk = skeleton(m);
      Json cert;
      cert["alpha"] = to_json(alpha);
      cert["beta"] = to_json(beta);
      cert["skeleton_restriction"] = to_json(restrict(alpha, sk));
      cert["valid"] = alpha != beta && restrict(alpha, sk) == restrict(beta, sk) &&
                      is_compatible(m, alpha) && is_compatible(m, beta);
      j["certificate"] = std::move(cert);
      return session.emit(j, kPropertyFalse);
    }
    if (classify_cmd->parsed()) {
      Json j;
      j["tags"] = classify(algebra_from_json(session.read(file))).tags();
      return session.emit(j, kSuccess);
    }
    if (generate->parsed()) {
      CorpusSpec spec;
      spec.max_dual_points = max_points;
      spec.max_algebra_size = limits.max_size;
      spec.seed = seed;
      spec.random_count = random_count;
      spec.include_named = !no_named;
      Json j = Json::array();
      for (const auto& entry : corpus(spec)) j.push_back(to_json(entry));
      return session.emit(j, kSuccess);
    }
    if (verify->parsed()) {
      auto result = verify_theorem(max_points, jobs, limits);
      return session.emit(result.report,
                          result.all_agree && result.cep_everywhere ? kSuccess : kPropertyFalse);
    }
  } catch (const SizeLimitError& e) {
    err << e.what() << '\n';
    return session.emit(error_json(e.what(), kSizeLimit), kSizeLimit);
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return session.emit(error_json(e.what(), kInputError), kInputError);
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return session.emit(error_json(e.what(), kInputError), kInputError);
  } catch (const Json::exception& e) {
    err << e.what() << '\n';
    return session.emit(error_json(e.what(), kInputError), kInputError);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return session.emit(error_json(e.what(), kPropertyFalse), kPropertyFalse);
  }
  return session.emit(error_json("no command", kInputError), kInputError);
}

}  // namespace demorgan::cli
