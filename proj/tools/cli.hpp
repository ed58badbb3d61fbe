#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "difftest.hpp"
#include "mullineux.hpp"

namespace mullineux::cli {

using json = nlohmann::ordered_json;

enum exit_code : int { ok = 0, invalid = 2, internal = 3 };

namespace detail {

inline json steps_json(const Trace& trace) {
  json arr = json::array();
  for (const auto& st : trace) arr.push_back({{"label", st.label}, {"charge", text::format(st.charge)}, {"state", st.state}});
  return arr;
}

inline void print_steps(std::ostream& out, const Trace& trace) {
  for (const auto& st : trace) out << st.label << " [" << text::format(st.charge) << "] " << st.state << "\n";
}

struct Common {
  int e = 0;
  std::string format = "text";
  bool trace = false;
};

inline void emit(std::ostream& out, const Common& c, const json& input, const std::string& method,
                 const std::string& result, const Trace* trace) {
  if (c.format == "json") {
    json report{{"e", c.e}, {"input", input}, {"method", method}, {"result", result}};
    if (trace) report["steps"] = steps_json(*trace);
    out << report.dump(2) << "\n";
    return;
  }
  if (trace) print_steps(out, *trace);
  out << result << "\n";
}

inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = text::detail::parse_int(s);
    return {v, v};
  }
  return {text::detail::parse_int(s.substr(0, dots)), text::detail::parse_int(s.substr(dots + 2))};
}

inline json difftest_json(const DifftestReport& r) {
  json props = json::object();
  for (const auto& [name, t] : r.properties) {
    json p{{"checked", t.checked}, {"failed", t.failed}};
    if (t.counterexample) p["counterexample"] = *t.counterexample;
    props[name] = p;
  }
  return {{"e", {r.e_lo, r.e_hi}},
          {"input", {{"e_range", std::to_string(r.e_lo) + ".." + std::to_string(r.e_hi)},
                     {"max_n", r.max_n},
                     {"partitions", r.inputs}}},
          {"method", "difftest"},
          {"result", r.passed() ? "pass" : "fail"},
          {"properties", props}};
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mullineux involution and related crystal computations"};
  app.require_subcommand(1);
  detail::Common c;
  auto add_common = [&](CLI::App* sub, bool e_required = true) {
    auto* opt = sub->add_option("--e", c.e, "quantum characteristic e >= 2");
    if (e_required) opt->required();
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  std::string partition, method = "crystal", charge, to, bipartition, multisegment, e_range = "2..6";
  std::optional<int> s_param;
  int n = 0, max_n = 12;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* m = app.add_subcommand("mullineux", "Mullineux image of an e-regular partition");
  add_common(m);
  m->add_option("--partition", partition, "parts, comma separated, or -")->required();
  m->add_option("--method", method, "crystal, xu, kleshchev or all")
      ->check(CLI::IsMember({"crystal", "xu", "kleshchev", "all"}));
  m->add_option("--s", s_param, "recursion parameter 0 < s < e (crystal only)");
  m->add_flag("--trace", c.trace, "print the intermediate steps");

  auto* iso = app.add_subcommand("crystal-iso", "crystal isomorphism between charges of one orbit");
  add_common(iso);
  iso->add_option("--charge", charge, "source multicharge")->required();
  iso->add_option("--to", to, "target multicharge")->required();
  iso->add_option("--bipartition,--multipartition", bipartition, "components joined by |")->required();

  auto* th = app.add_subcommand("theta", "embedding of an e-regular partition at a fundamental charge");
  add_common(th);
  th->add_option("--charge", charge, "fundamental multicharge")->required();
  th->add_option("--partition", partition, "parts, comma separated, or -")->required();

  auto* im = app.add_subcommand("im", "Iwahori-Matsumoto involution of an aperiodic multisegment");
  add_common(im);
  im->add_option("--multisegment", multisegment, "head:length items joined by ;")->required();
  im->add_flag("--trace", c.trace, "print the intermediate steps");

  auto* en = app.add_subcommand("enumerate", "Uglov labels at a charge, or e-regular partitions");
  add_common(en);
  en->add_option("--n", n, "rank")->required();
  en->add_option("--charge", charge, "multicharge; omit for e-regular partitions");

  auto* dt = app.add_subcommand("difftest", "exhaustive property sweep");
  add_common(dt, false);
  dt->add_option("--e-range", e_range, "lo..hi");
  dt->add_option("--max-n", max_n, "largest rank");
  dt->add_option("--jobs", jobs, "worker threads");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? ok : invalid;
  }

  try {
    if (m->parsed()) {
      const Partition lambda = text::parse_partition(partition);
      require_e(c.e);
      if (!is_e_regular(lambda, c.e)) fail(errc::invalid_input, "partition is not " + std::to_string(c.e) + "-regular");
      const int s = s_param.value_or(c.e - 1);
      json input{{"partition", text::format(lambda)}};
      if (method == "crystal" || method == "all") input["s"] = s;
      Trace trace;
      std::string result;
      if (method == "crystal") {
        result = text::format(c.trace ? mullineux_crystal_traced(lambda, c.e, s, trace) : mullineux_crystal(lambda, c.e, s));
      } else if (method == "xu") {
        result = text::format(xu(lambda, c.e));
      } else if (method == "kleshchev") {
        result = text::format(kleshchev_oracle(lambda, c.e));
      } else {
        const std::string a = text::format(c.trace ? mullineux_crystal_traced(lambda, c.e, s, trace) : mullineux_crystal(lambda, c.e, s));
        const std::string b = text::format(xu(lambda, c.e));
        const std::string k = text::format(kleshchev_oracle(lambda, c.e));
        if (a != b || b != k) {
          err << "internal-consistency: methods disagree: crystal " << a << ", xu " << b << ", kleshchev " << k << "\n";
          return internal;
        }
        result = a;
        if (c.format == "text") {
          if (c.trace) detail::print_steps(out, trace);
          out << "crystal: " << a << "\nxu: " << b << "\nkleshchev: " << k << "\n";
          return ok;
        }
      }
      detail::emit(out, c, input, method, result, c.trace ? &trace : nullptr);
      return ok;
    }

    if (iso->parsed()) {
      const Multicharge from = text::parse_charge(charge);
      const Multicharge target = text::parse_charge(to);
      const Multipartition mp = text::parse_multipartition(bipartition);
      const auto image = psi({mp, from, c.e}, target);
      detail::emit(out, c, {{"multipartition", text::format(mp)}, {"charge", text::format(from)}, {"to", text::format(target)}},
                   "crystal-iso", text::format(image.mp), nullptr);
      return ok;
    }

    if (th->parsed()) {
      const Multicharge s = text::parse_charge(charge);
      const Partition lambda = text::parse_partition(partition);
      detail::emit(out, c, {{"partition", text::format(lambda)}, {"charge", text::format(s)}}, "theta",
                   text::format(theta(lambda, c.e, s)), nullptr);
      return ok;
    }

    if (im->parsed()) {
      const Multisegment psi_in = text::parse_multisegment(multisegment, c.e);
      Trace trace;
      const Multisegment image = im_sharp(psi_in, c.e, c.trace ? &trace : nullptr);
      detail::emit(out, c, {{"multisegment", text::format(psi_in)}}, "im", text::format(image),
                   c.trace ? &trace : nullptr);
      return ok;
    }

    if (en->parsed()) {
      require_e(c.e);
      std::vector<std::string> lines;
      json input{{"n", n}};
      if (!charge.empty()) {
        const Multicharge s = text::parse_charge(charge);
        input["charge"] = text::format(s);
        for (const auto& mp : enumerate_phi(c.e, s, n)) lines.push_back(text::format(mp));
      } else {
        for (const auto& p : enumerate_e_regular(n, c.e)) lines.push_back(text::format(p));
      }
      if (c.format == "json") {
        json report{{"e", c.e}, {"input", input}, {"method", "enumerate"}, {"result", lines}};
        out << report.dump(2) << "\n";
      } else {
        for (const auto& l : lines) out << l << "\n";
      }
      return ok;
    }

    if (dt->parsed()) {
      const auto [lo, hi] = detail::parse_range(e_range);
      require_e(lo);
      if (hi < lo) fail(errc::invalid_parameter, "empty e range");
      if (max_n < 0) fail(errc::invalid_parameter, "max-n must be nonnegative");
      const auto report = run_difftest(lo, hi, max_n, jobs);
      if (c.format == "json") {
        out << detail::difftest_json(report).dump(2) << "\n";
      } else {
        for (const auto& [name, t] : report.properties) {
          out << name << ": " << (t.failed ? "FAIL" : "pass") << " checked=" << t.checked << " failed=" << t.failed;
          if (t.counterexample) out << " first=" << *t.counterexample;
          out << "\n";
        }
        out << report.inputs << " partitions, " << (report.passed() ? "all properties pass" : "FAILURES") << "\n";
      }
      return report.passed() ? ok : internal;
    }
  } catch (const error& ex) {
    err << ex.what() << "\n";
    return ex.code() == errc::internal_consistency ? internal : invalid;
  }
  return invalid;
}

}  // namespace mullineux::cli
