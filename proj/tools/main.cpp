#include <atomic>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "p1bimod/error.hpp"
#include "p1bimod/io.hpp"

using namespace p1bimod;

namespace {

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::WindowTooSmall:
      return 2;
    case ErrorCode::SplitFailure:
      return 3;
    case ErrorCode::Format:
    case ErrorCode::Io:
      return 4;
    default:
      return 1;
  }
}

int report_error(std::string_view name, const std::string& message, int code) {
  Json j{{"error", name}, {"message", message}, {"exit", code}};
  std::cerr << j.dump() << '\n';
  return code;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

FunctorData load_functor(const std::string& path) { return functor_from_json(read_json_file(path)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json suite_json(const PropertyReport& r) {
  Json out = Json::array();
  for (const auto& e : r.entries) out.push_back({{"claim", e.claim}, {"pass", e.pass}, {"status", e.status}, {"detail", e.detail}});
  return out;
}

struct CorpusOutcome {
  bool round_trip = false;
  bool suite = false;
  std::string failure;
};

CorpusOutcome check_instance(const ComposeSpec& spec) {
  CorpusOutcome o;
  try {
    FunctorData f = compose(spec);
    o.round_trip = decompose(f).decomposition == spec.decomposition;
    if (!o.round_trip) o.failure = "round trip mismatch";
    PropertyReport r = run_property_suite(f);
    o.suite = true;
    for (const auto& e : r.entries) {
      if (e.status != "pass") {
        o.suite = false;
        if (o.failure.empty()) o.failure = e.claim + ": " + e.status + " " + e.detail;
      }
    }
  } catch (const std::exception& e) {
    o.failure = e.what();
  }
  return o;
}

Json verify_corpus(std::uint64_t seed, std::size_t count, bool& ok) {
  auto specs = corpus(seed, count);
  std::vector<CorpusOutcome> outcomes(specs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < specs.size();) outcomes[k] = check_instance(specs[k]);
    });
  }
  for (auto& t : pool) t.join();

  std::size_t rt = 0, suite = 0;
  Json failures = Json::array();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    rt += outcomes[k].round_trip;
    suite += outcomes[k].suite;
    if (!outcomes[k].round_trip || !outcomes[k].suite) {
      failures.push_back({{"index", k}, {"spec", spec_to_json(specs[k])}, {"reason", outcomes[k].failure}});
    }
  }
  ok = failures.empty();
  return {{"seed", seed}, {"count", count}, {"round_trip_passed", rt}, {"suite_passed", suite}, {"failures", failures}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure engine for functors from coherent sheaves on the projective line to vector spaces"};
  app.require_subcommand(1);

  std::string spec_file, out, in_file, sheaf_file;
  std::optional<std::uint64_t> gauge_seed;
  long long twist = 0;
  bool twist_given = false, quick = false;
  std::vector<std::uint64_t> corpus_args;

  auto* compose_cmd = app.add_subcommand("compose", "Build a functor from a decomposition spec");
  compose_cmd->add_option("--spec", spec_file, "Spec JSON")->required();
  compose_cmd->add_option("--gauge-seed", gauge_seed, "Gauge scramble seed (overrides the spec)");
  compose_cmd->add_option("-o,--output", out, "Output functor JSON")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a functor and write a certified report");
  decompose_cmd->add_option("file", in_file, "Functor JSON")->required();
  decompose_cmd->add_option("-o,--output", out, "Output report JSON (stdout if omitted)");

  auto* classify_cmd = app.add_subcommand("classify", "Integral transform and pullback verdicts");
  classify_cmd->add_option("file", in_file, "Functor JSON")->required();
  classify_cmd->add_flag("--quick", quick, "Dimension test only, skip cross-checks");

  auto* eval_cmd = app.add_subcommand("eval", "Dimension of F on a coherent sheaf");
  eval_cmd->add_option("file", in_file, "Functor JSON")->required();
  eval_cmd->add_option("--sheaf", sheaf_file, "Sheaf JSON")->required();
  eval_cmd->add_option("--twist", twist, "Top degree d of torsion presentations (default hi)");

  auto* cohom_cmd = app.add_subcommand("cohomology", "h0 and h1 of a coherent sheaf");
  cohom_cmd->add_option("--sheaf", sheaf_file, "Sheaf JSON")->required();
  cohom_cmd->add_option("--twist", twist, "Twist by O(i)");

  auto* verify_cmd = app.add_subcommand("verify", "Property suite on a file, or round trip plus suite on a corpus");
  verify_cmd->add_option("file", in_file, "Functor JSON");
  verify_cmd->add_option("--corpus", corpus_args, "Seed and instance count")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("FORMAT", e.what(), 4);
  }
  twist_given = eval_cmd->count("--twist") > 0;

  try {
    if (*compose_cmd) {
      ComposeSpec spec = spec_from_json(read_json_file(spec_file));
      if (gauge_seed) spec.gauge_seed = gauge_seed;
      emit(functor_to_json(compose(spec)), out);
    } else if (*decompose_cmd) {
      FunctorData f = load_functor(in_file);
      DecomposeResult r = decompose(f);
      emit(report_to_json(r, run_property_suite(f)), out);
    } else if (*classify_cmd) {
      FunctorData f = load_functor(in_file);
      const CheckMode mode = quick ? CheckMode::Quick : CheckMode::Verify;
      const bool integral = is_integral_transform(f, mode);
      auto r = is_pullback(f, mode);
      std::cout << "integral_transform: " << yes_no(integral) << "; pullback: " << (r ? r->to_string() : "none") << '\n';
    } else if (*eval_cmd) {
      FunctorData f = load_functor(in_file);
      CoherentSheaf s = sheaf_from_json(read_json_file(sheaf_file), f.field);
      std::cout << evaluate_on_sheaf(f, s, twist_given ? twist : f.hi).dim << '\n';
    } else if (*cohom_cmd) {
      CoherentSheaf s = ::p1bimod::twist(sheaf_from_json(read_json_file(sheaf_file), Field::rationals()), twist);
      std::cout << "h0: " << h0_dim(s) << "\nh1: " << h1_dim(s) << '\n';
    } else if (*verify_cmd) {
      bool ok = false;
      Json report;
      if (!corpus_args.empty()) {
        report = verify_corpus(corpus_args[0], static_cast<std::size_t>(corpus_args[1]), ok);
      } else if (!in_file.empty()) {
        PropertyReport r = run_property_suite(load_functor(in_file));
        ok = r.ok();
        report = {{"ok", ok}, {"properties", suite_json(r)}};
      } else {
        return report_error("FORMAT", "verify needs a functor file or --corpus <seed> <count>", 4);
      }
      std::cout << report.dump(2) << '\n';
      if (!ok) return report_error("NOT_ADMISSIBLE", "verification failed", 1);
    }
  } catch (const EngineError& e) {
    return report_error(error_name(e.code()), e.what(), exit_code(e.code()));
  } catch (const std::exception& e) {
    return report_error("INTERNAL", e.what(), 1);
  }
  return 0;
}
