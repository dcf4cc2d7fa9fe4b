#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "vk/gauss_code.hpp"
#include "vk/json_io.hpp"

using namespace vk;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

SearchBudget budget_from_env() {
  SearchBudget b;
  const char* env = std::getenv("VK_BUDGET");
  if (!env) return b;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    long val = std::strtol(item.c_str() + eq + 1, nullptr, 10);
    if (key == "expand") b.r2_expansion_depth = static_cast<int>(val);
    else if (key == "r3") b.r3_cap = static_cast<int>(val);
    else if (key == "frontier") b.frontier_cap = static_cast<std::size_t>(val);
  }
  return b;
}

struct Emitter {
  std::string command;
  std::string input;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(const ordered_json& result, int code) const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    ordered_json out;
    out["command"] = command;
    if (!input.empty()) out["input"] = input;
    out["result"] = result;
    out["timing_ms"] = ms;
    std::cout << out.dump(2) << "\n";
    return code;
  }
};

int fail_parse(const ParseError& e) {
  std::cerr << "parse error at byte " << e.position << ": " << e.what() << "\n";
  return kExitError;
}

std::vector<int> parse_id_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::optional<FamilySpec> spec_from_args(const std::string& name, int m, int p, int n,
                                         int q, int r, int t, int k) {
  auto kind = family_from_name(name);
  if (!kind) return std::nullopt;
  FamilySpec s;
  s.kind = *kind;
  s.m = m;
  s.p = p;
  s.n = n;
  s.q = q;
  s.r = r;
  s.t = t;
  s.k = k;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-diagram engine for virtual knot and link invariants"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "parallelism cap for plan search");

  std::string code, family, plan_virt, plan_change, file;
  int m = 0, p = 0, n = 0, q = 0, r = 0, t = 0, k = 0;
  int max_n = -1, max_m = -1;

  auto* cmd_parse = app.add_subcommand("parse", "parse a Gauss code, print canonical form");
  cmd_parse->add_option("code", code)->required();

  auto* cmd_inv = app.add_subcommand("invariants", "writhe vector, polynomial, bounds");
  cmd_inv->add_option("code", code)->required();

  auto* cmd_family = app.add_subcommand("family", "generate a named diagram family");
  cmd_family->add_option("name", family)->required();

  auto* cmd_search = app.add_subcommand("search", "dictionary-order unknotting search");
  cmd_search->add_option("code", code)->required();
  cmd_search->add_option("--max-n", max_n, "cap on virtualizations");
  cmd_search->add_option("--max-m", max_m, "cap on crossing changes");

  auto* cmd_certify = app.add_subcommand("certify", "certify one unknotting plan");
  cmd_certify->add_option("code", code)->required();
  cmd_certify->add_option("--virtualize", plan_virt, "chord ids, comma separated");
  cmd_certify->add_option("--change", plan_change, "chord ids, comma separated");

  auto* cmd_verify = app.add_subcommand("verify-theorem", "recompute a family's unknotting index");
  cmd_verify->add_option("name", family)->required();

  auto* cmd_replay = app.add_subcommand("replay", "re-check a certificate or trace file");
  cmd_replay->add_option("file", file)->required();

  auto* cmd_batch = app.add_subcommand("batch", "invariants per line of Gauss codes");
  cmd_batch->add_option("file", file, "input file (default stdin)");

  for (auto* c : {cmd_family, cmd_verify}) {
    c->add_option("--m", m);
    c->add_option("--p", p);
    c->add_option("--n", n);
    c->add_option("--q", q);
    c->add_option("--r", r);
    c->add_option("--t", t);
    c->add_option("--k", k);
  }

  CLI11_PARSE(app, argc, argv);
  SearchBudget budget = budget_from_env();

  try {
    if (cmd_parse->parsed()) {
      Emitter em{"parse", code};
      GaussDiagram d;
      try {
        d = parse_gauss_code(code);
      } catch (const ParseError& e) {
        return fail_parse(e);
      }
      ordered_json res;
      res["canonical"] = canonical_code(d);
      res["components"] = d.component_count();
      res["chords"] = d.chord_count();
      res["json"] = diagram_to_json(d);
      return em.emit(res, kExitOk);
    }

    if (cmd_inv->parsed()) {
      Emitter em{"invariants", code};
      GaussDiagram d;
      try {
        d = parse_gauss_code(code);
      } catch (const ParseError& e) {
        return fail_parse(e);
      }
      return em.emit(invariants_report(d), kExitOk);
    }

    if (cmd_family->parsed()) {
      Emitter em{"family", family};
      auto spec = spec_from_args(family, m, p, n, q, r, t, k);
      if (!spec) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitError;
      }
      FamilyDiagram fd = generate(*spec);
      ordered_json res;
      res["family"] = spec->str();
      res["code"] = raw_code(fd.diagram);
      res["canonical"] = canonical_code(fd.diagram);
      res["profile"] = profile_to_json(fd.profile);
      return em.emit(res, kExitOk);
    }

    if (cmd_search->parsed()) {
      Emitter em{"search", code};
      GaussDiagram d;
      try {
        d = parse_gauss_code(code);
      } catch (const ParseError& e) {
        return fail_parse(e);
      }
      SearchOptions opts;
      opts.max_virtualizations = max_n;
      opts.max_changes = max_m;
      opts.threads = threads;
      opts.budget = budget;
      SearchResult sr = search_min(d, opts);
      ordered_json res = search_result_to_json(sr);
      if (sr.certificate) res["certificate"] = certificate_to_json(d, *sr.certificate);
      if (sr.cap_exceeded) return em.emit(res, kExitInconclusive);
      return em.emit(res, sr.interval.upper ? kExitOk : kExitInconclusive);
    }

    if (cmd_certify->parsed()) {
      Emitter em{"certify", code};
      GaussDiagram d;
      try {
        d = parse_gauss_code(code);
      } catch (const ParseError& e) {
        return fail_parse(e);
      }
      UnknottingPlan plan{parse_id_list(plan_virt), parse_id_list(plan_change)};
      auto cert = certify(d, plan, budget);
      if (!cert) return em.emit(ordered_json{{"status", "inconclusive"}}, kExitInconclusive);
      ordered_json res = certificate_to_json(d, *cert);
      res["status"] = "certified";
      return em.emit(res, kExitOk);
    }

    if (cmd_verify->parsed()) {
      Emitter em{"verify-theorem", family};
      auto spec = spec_from_args(family, m, p, n, q, r, t, k);
      if (!spec) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitError;
      }
      TheoremReport rep = verify_theorem(*spec, budget);
      return em.emit(theorem_report_to_json(rep), rep.pass ? kExitOk : kExitError);
    }

    if (cmd_replay->parsed()) {
      Emitter em{"replay", file};
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return kExitError;
      }
      ordered_json j = ordered_json::parse(in);
      bool ok;
      if (j.contains("plan")) {
        GaussDiagram d = parse_gauss_code(j.at("diagram").get<std::string>());
        UnknottingCertificate cert;
        cert.plan = plan_from_json(j.at("plan"));
        cert.trace = trace_from_json(j.at("trace"));
        cert.cost = {j.at("cost")[0], j.at("cost")[1]};
        ok = check_certificate(d, cert);
      } else {
        ok = replay(trace_from_json(j));
      }
      return em.emit(ordered_json{{"valid", ok}}, ok ? kExitOk : kExitError);
    }

    if (cmd_batch->parsed()) {
      std::istream* in = &std::cin;
      std::ifstream f;
      if (!file.empty()) {
        f.open(file);
        if (!f) {
          std::cerr << "cannot open " << file << "\n";
          return kExitError;
        }
        in = &f;
      }
      std::string line;
      bool any_error = false;
      while (std::getline(*in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        try {
          GaussDiagram d = parse_gauss_code(line);
          std::cout << invariants_report(d).dump() << "\n";
        } catch (const ParseError& e) {
          ordered_json err{{"error", e.what()}, {"position", e.position}};
          std::cout << err.dump() << "\n";
          any_error = true;
        }
      }
      return any_error ? kExitError : kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
