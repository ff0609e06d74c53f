#include "stab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "stab/dfinite.hpp"
#include "stab/dynsys.hpp"
#include "stab/error.hpp"
#include "stab/integrate.hpp"
#include "stab/parser.hpp"
#include "stab/stability.hpp"

namespace stab {

using nlohmann::json;

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NormalizationReject:
    case ErrorCode::Unsupported:
    case ErrorCode::NoCertificateWithinLimits: return 1;
    default: return 2;
  }
}

std::string status_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NormalizationReject: return "out_of_fragment";
    case ErrorCode::Unsupported:
    case ErrorCode::NoCertificateWithinLimits: return "unsupported";
    default: return "error";
  }
}

CliResult failure(const std::string& command, const Error& e) {
  json j = {{"command", command},
            {"status", status_for(e.code())},
            {"error", std::string(to_string(e.code()))},
            {"message", e.what()}};
  return {j, exit_code_for(e.code())};
}

CliResult usage_error(const std::string& command, const std::string& msg) {
  return {json{{"command", command}, {"status", "error"}, {"error", "Usage"}, {"message", msg}}, 2};
}

Derivation parse_derivation(const std::string& s) {
  if (s == "ddx") return Derivation::DDx;
  if (s == "euler") return Derivation::EulerXDDx;
  throw Error(ErrorCode::InvalidArgument, "derivation must be ddx or euler");
}

OreKind parse_kind(const std::string& s) {
  if (s == "diff") return OreKind::Diff;
  if (s == "shift") return OreKind::Shift;
  throw Error(ErrorCode::InvalidArgument, "kind must be diff or shift");
}

json obstruction_json(const Obstruction& o) {
  json j = {{"kind", std::string(to_string(o.kind))}, {"detail", o.detail}};
  if (o.kind == ObstructionKind::MomentIndex) j["index"] = o.index;
  return j;
}

json chain_json(const WitnessChain& c) {
  json a = json::array();
  for (const auto& g : c) a.push_back(g.str());
  return a;
}

json verdict_json(const std::string& input, Derivation d, const std::string& field, const StabilityVerdict& v) {
  json j = {{"command", "stable"},
            {"status", v.verdict == Verdict::OutOfFragment ? "out_of_fragment" : "ok"},
            {"input", input},
            {"derivation", std::string(to_string(d))},
            {"field", field},
            {"verdict", std::string(to_string(v.verdict))}};
  if (v.obstruction) j["obstruction"] = obstruction_json(*v.obstruction);
  if (v.verdict == Verdict::OutOfFragment) j["reason"] = v.reason;
  return j;
}

StabilityVerdict decide(const ElemExpr& e, Derivation d, const std::string& field) {
  const bool rational = e.log_degree() <= 0 && !e.expo;
  if (d == Derivation::EulerXDDx || field == "rational") {
    if (!rational) return {Verdict::OutOfFragment, std::nullopt, "input is not a rational function"};
    return stable_in_ratfield(e.coeff(0), d);
  }
  return stable_elementary(e);
}

TruncSeries parse_series_list(const std::string& text) {
  TruncSeries s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    RatFunc v = parse_ratfunc(item);
    if (!v.is_constant()) throw Error(ErrorCode::InvalidArgument, "series coefficients must be rational numbers");
    s.coeffs.push_back(v.constant_value());
  }
  if (s.coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "empty series");
  return s;
}

// Named generator or explicit coefficient list; the recurrence is known only for generators.
std::optional<NamedSeries> named(const std::string& text, int T) {
  if (text == "exp" || text == "geom") return named_series(text, T);
  if (text.rfind("poly:", 0) == 0) {
    RatFunc p = parse_ratfunc(text.substr(5));
    if (!p.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "poly: needs a polynomial");
    return poly_series(p.num(), T);
  }
  return std::nullopt;
}

json series_json(const TruncSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs) a.push_back(rat_str(c));
  return a;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

CliResult run_stable(const std::string& expr, const std::string& derivation, const std::string& field, int depth) {
  try {
    Derivation d = parse_derivation(derivation);
    if (field != "elementary" && field != "rational")
      throw Error(ErrorCode::InvalidArgument, "field must be elementary or rational");
    const std::string used_field = d == Derivation::EulerXDDx ? "rational" : field;
    ElemExpr e;
    try {
      e = normalize(*parse(expr));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NormalizationReject) throw;
      StabilityVerdict v{Verdict::OutOfFragment, std::nullopt, err.what()};
      return {verdict_json(expr, d, used_field, v), 1};
    }
    StabilityVerdict v = decide(e, d, used_field);
    json j = verdict_json(expr, d, used_field, v);
    j["normalized"] = e.str();
    if (v.verdict == Verdict::OutOfFragment) return {j, 1};
    if (v.verdict == Verdict::Stable && depth > 0) {
      WitnessChain c = witness_chain(e, depth, d);
      j["witness_chain"] = chain_json(c);
      j["chain_verified"] = check_chain(e, c, d);
    }
    return {j, 0};
  } catch (const Error& err) {
    return failure("stable", err);
  }
}

CliResult run(const std::vector<std::string>& args) {
  CLI::App app{"Stability of iterated antiderivatives", "stab"};
  app.require_subcommand(1);

  std::string expr, derivation = "ddx", field = "elementary";
  int depth = 0;
  auto* stable = app.add_subcommand("stable", "decide stability");
  stable->add_option("expr", expr)->required();
  stable->add_option("--derivation", derivation)->check(CLI::IsMember({"ddx", "euler"}));
  stable->add_option("--field", field, "elementary (default) or rational")->check(CLI::IsMember({"elementary", "rational"}));
  stable->add_option("--depth", depth, "also emit a verified witness chain of this depth");

  int wdepth = 3;
  auto* witness = app.add_subcommand("witness", "witness chain of antiderivatives");
  witness->add_option("expr", expr)->required();
  witness->add_option("--depth,-k", wdepth);
  witness->add_option("--derivation", derivation)->check(CLI::IsMember({"ddx", "euler"}));

  int moments_n = 10;
  auto* moments = app.add_subcommand("moments", "first i <= N with x^i*f not integrable in Q(x)");
  moments->add_option("f", expr)->required();
  moments->add_option("-N", moments_n);

  auto* integrable = app.add_subcommand("integrable", "antiderivative inside Q(x)");
  integrable->add_option("f", expr)->required();
  integrable->add_option("--derivation", derivation)->check(CLI::IsMember({"ddx", "euler"}));

  auto* lh = app.add_subcommand("lh", "Liouville-Hardy test for f*log(x)");
  lh->add_option("f", expr)->required();

  auto* dred = app.add_subcommand("dred", "differential-reduced test");
  dred->add_option("f", expr)->required();

  std::string pa, pb;
  int risch_m = 0;
  auto* risch = app.add_subcommand("risch", "polynomial Q with P = b*Q' + (a + (m+1)*b')*Q");
  risch->add_option("P", expr)->required();
  risch->add_option("a", pa)->required();
  risch->add_option("b", pb)->required();
  risch->add_option("--m", risch_m);

  int skolem_max = 12;
  bool serial = false;
  auto* skolem = app.add_subcommand("skolem", "indices i with x^i*f*exp(g) elementary integrable");
  skolem->add_option("expr", expr)->required();
  skolem->add_option("--max", skolem_max);
  skolem->add_flag("--serial", serial);

  std::string ore_op, kind = "diff";
  auto* ore = app.add_subcommand("ore", "operator arithmetic");
  ore->add_option("op", ore_op, "mul | divmod | gcrd | lclm | apply | normalize")
      ->required()
      ->check(CLI::IsMember({"mul", "divmod", "gcrd", "lclm", "apply", "normalize"}));
  ore->add_option("A", expr)->required();
  ore->add_option("B", pa);
  ore->add_option("--kind", kind)->check(CLI::IsMember({"diff", "shift"}));

  auto* dfinite = app.add_subcommand("dfinite", "D-finite series");
  dfinite->require_subcommand(1);
  int max_ord = 3, max_deg = 3, truncation = -1, max_m = 6, window = 3;
  std::string series, rec, direction;
  auto* guess = dfinite->add_subcommand("guess", "minimal annihilator within bounds");
  guess->add_option("series", series)->required();
  guess->add_option("--max-ord", max_ord);
  guess->add_option("--max-deg", max_deg);
  guess->add_option("--truncation,-T", truncation);
  auto* certify = dfinite->add_subcommand("certify", "eventual stability certificate");
  certify->add_option("series", series)->required();
  certify->add_option("--rec", rec, "recurrence in n and S (required for explicit coefficient lists)");
  certify->add_option("--max-m", max_m);
  certify->add_option("--window", window);
  certify->add_option("--truncation,-T", truncation);
  certify->add_flag("--serial", serial);
  auto* convert = dfinite->add_subcommand("convert", "d2s: operator to recurrence; s2d: recurrence and series to operator");
  convert->add_option("direction", direction)->required()->check(CLI::IsMember({"d2s", "s2d"}));
  convert->add_option("operator", expr)->required();
  convert->add_option("series", series);
  convert->add_option("--truncation,-T", truncation);

  auto* dynsys = app.add_subcommand("dynsys", "finite dynamical systems");
  dynsys->require_subcommand(1);
  std::string path;
  int gN = 3, gM = 3;
  auto* analyze_cmd = dynsys->add_subcommand("analyze", "Fix, Per, Stab, Attrac");
  analyze_cmd->add_option("file", path)->required();
  auto* check_cmd = dynsys->add_subcommand("check", "check Godelle's theorem on an instance");
  check_cmd->add_option("file", path)->required();
  auto* godelle = dynsys->add_subcommand("godelle", "truncated Godelle example");
  godelle->add_option("-N", gN);
  godelle->add_option("-M", gM);

  auto* batch = app.add_subcommand("batch", "one stable record per input line");
  batch->add_option("file", path)->required();
  batch->add_option("--derivation", derivation)->check(CLI::IsMember({"ddx", "euler"}));
  batch->add_option("--field", field)->check(CLI::IsMember({"elementary", "rational"}));
  batch->add_option("--depth", depth);
  batch->add_flag("--serial", serial, "evaluate lines one at a time");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {json{{"command", "help"}, {"status", "ok"}, {"help", app.help()}}, 0};
  } catch (const CLI::ParseError& e) {
    return usage_error(args.empty() ? "" : args[0], e.what());
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*stable) return run_stable(expr, derivation, field, depth);

    if (*witness) {
      Derivation d = parse_derivation(derivation);
      ElemExpr e = normalize(*parse(expr));
      json j = {{"command", command}, {"input", expr}, {"derivation", std::string(to_string(d))}, {"depth", wdepth}};
      StabilityVerdict v = decide(e, d, d == Derivation::DDx ? "elementary" : "rational");
      j["verdict"] = std::string(to_string(v.verdict));
      if (v.verdict != Verdict::Stable) {
        if (v.obstruction) j["obstruction"] = obstruction_json(*v.obstruction);
        j["status"] = v.verdict == Verdict::OutOfFragment ? "out_of_fragment" : "ok";
        return {j, v.verdict == Verdict::OutOfFragment ? 1 : 0};
      }
      WitnessChain c = witness_chain(e, wdepth, d);
      j["status"] = "ok";
      j["witness_chain"] = chain_json(c);
      j["chain_verified"] = check_chain(e, c, d);
      return {j, 0};
    }

    if (*moments) {
      RatFunc f = parse_ratfunc(expr);
      auto i = moment_obstruction(f, moments_n);
      return {json{{"command", command}, {"status", "ok"}, {"input", expr}, {"N", moments_n},
                   {"obstruction_index", i ? json(*i) : json(nullptr)}},
              0};
    }

    if (*integrable) {
      Derivation d = parse_derivation(derivation);
      RatFunc f = parse_ratfunc(expr);
      auto g = integrable_in_field(f, d);
      json j = {{"command", command}, {"status", "ok"}, {"input", expr},
                {"derivation", std::string(to_string(d))}, {"integrable", g.has_value()}};
      if (g) j["antiderivative"] = g->str();
      return {j, 0};
    }

    if (*lh) {
      RatFunc f = parse_ratfunc(expr);
      auto r = liouville_hardy(f);
      json j = {{"command", command}, {"status", "ok"}, {"input", expr}, {"of_form", r.has_value()}};
      if (r) {
        j["c"] = rat_str(r->c);
        j["g"] = r->g.str();
      }
      return {j, 0};
    }

    if (*dred) {
      RatFunc f = parse_ratfunc(expr);
      return {json{{"command", command}, {"status", "ok"}, {"input", expr},
                   {"differential_reduced", is_differential_reduced(f)},
                   {"resultant", residue_resultant(f).str("z")}},
              0};
    }

    if (*risch) {
      auto poly = [](const std::string& t) {
        RatFunc r = parse_ratfunc(t);
        if (!r.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "expected a polynomial: " + t);
        return r.num();
      };
      auto sol = risch_de_poly(poly(expr), poly(pa), poly(pb), risch_m);
      json j = {{"command", command}, {"status", "ok"}, {"solved", sol.has_value()}};
      if (sol) j["Q"] = sol->Q.str();
      return {j, 0};
    }

    if (*skolem) {
      ElemExpr e = normalize(*parse(expr));
      if (e.log_degree() > 0) throw Error(ErrorCode::Unsupported, "skolem scans need f*exp(g) without log(x)");
      RatFunc g = e.expo ? *e.expo : RatFunc();
      auto idx = serial ? skolem_scan_serial(e.coeff(0), g, skolem_max) : skolem_scan(e.coeff(0), g, skolem_max);
      return {json{{"command", command}, {"status", "ok"}, {"input", expr}, {"max", skolem_max},
                   {"integrable_indices", idx}},
              0};
    }

    if (*ore) {
      OreKind k = parse_kind(kind);
      OreOperator A = parse_operator(expr, k);
      json j = {{"command", command}, {"status", "ok"}, {"op", ore_op}, {"kind", kind}};
      auto need_b = [&]() {
        if (pa.empty()) throw Error(ErrorCode::InvalidArgument, ore_op + " needs a second operand");
        return parse_operator(pa, k);
      };
      if (ore_op == "mul") {
        j["result"] = multiply(A, need_b()).str();
      } else if (ore_op == "divmod") {
        auto [q, r] = right_divmod(A, need_b());
        j["quotient"] = q.str();
        j["remainder"] = r.str();
      } else if (ore_op == "gcrd") {
        j["result"] = gcrd(A, need_b()).str();
      } else if (ore_op == "lclm") {
        j["result"] = lclm(A, need_b()).str();
      } else if (ore_op == "normalize") {
        j["result"] = A.normalized().str();
      } else {
        if (pa.empty()) throw Error(ErrorCode::InvalidArgument, "apply needs a target");
        if (k == OreKind::Diff) {
          j["result"] = apply(A, parse_ratfunc(pa)).str();
        } else {
          TruncSeries s = parse_series_list(pa);
          j["result"] = series_json(TruncSeries{apply(A, as_window(s)).values});
        }
      }
      return {j, 0};
    }

    if (*dfinite) {
      if (*guess) {
        command = "dfinite guess";
        const int T = truncation >= 0 ? truncation : std::max(30, required_truncation(max_ord, max_deg));
        auto ns = named(series, T);
        TruncSeries s = ns ? ns->series : parse_series_list(series);
        auto L = guess_min_annihilator(s, max_ord, max_deg);
        json j = {{"command", command}, {"status", "ok"}, {"truncation", s.truncation()},
                  {"max_ord", max_ord}, {"max_deg", max_deg}, {"found", L.has_value()}};
        if (L) {
          j["annihilator"] = L->str();
          j["order"] = L->order();
          j["degree"] = L->degree();
        }
        return {j, 0};
      }
      if (*certify) {
        command = "dfinite certify";
        auto probe = named(series, 0);
        OreOperator P = rec.empty() ? (probe ? probe->rec : OreOperator(OreKind::Shift))
                                    : parse_operator(rec, OreKind::Shift);
        if (P.is_zero()) throw Error(ErrorCode::InvalidArgument, "--rec is required for explicit coefficient lists");
        const int T = truncation >= 0 ? truncation : default_truncation(eventual_stability_bound(P));
        TruncSeries s = probe ? named(series, T)->series : parse_series_list(series);
        Certificate c = serial ? eventual_stability_certificate_serial(s, P, max_m, window)
                               : eventual_stability_certificate(s, P, max_m, window);
        json anns = json::array();
        for (const auto& a : c.annihilators) anns.push_back(a.str());
        return {json{{"command", command}, {"status", "ok"}, {"recurrence", P.str()},
                     {"truncation", s.truncation()}, {"m", c.m}, {"stable_order", c.stable_order},
                     {"annihilators", anns}, {"deg_bound", c.bound.deg_bound},
                     {"order_bound", c.bound.order_bound}, {"max_ord", c.max_ord}, {"max_deg", c.max_deg},
                     {"order_profile", c.order_profile}},
                0};
      }
      command = "dfinite convert";
      if (direction == "d2s") {
        OreOperator L = parse_operator(expr, OreKind::Diff);
        return {json{{"command", command}, {"status", "ok"}, {"direction", direction}, {"input", expr},
                     {"result", diff_to_rec(L).str()}},
                0};
      }
      OreOperator P = parse_operator(expr, OreKind::Shift);
      if (series.empty()) throw Error(ErrorCode::InvalidArgument, "s2d needs a series");
      const int T = truncation >= 0 ? truncation : 40;
      auto ns = named(series, T);
      TruncSeries s = ns ? ns->series : parse_series_list(series);
      return {json{{"command", command}, {"status", "ok"}, {"direction", direction}, {"input", expr},
                   {"result", rec_to_diff(P, s).str()}},
              0};
    }

    if (*dynsys) {
      if (*godelle) {
        command = "dynsys godelle";
        FiniteDynSys sys = godelle_truncation(gN, gM);
        json j = to_json(sys, analyze(sys));
        j["command"] = command;
        j["status"] = "ok";
        j["N"] = gN;
        j["M"] = gM;
        j["godelle"] = to_json(check_godelle(sys));
        return {j, 0};
      }
      FiniteDynSys sys = dynsys_from_json(read_json_file(path));
      if (*analyze_cmd) {
        json j = to_json(sys, analyze(sys));
        j["command"] = "dynsys analyze";
        j["status"] = "ok";
        return {j, 0};
      }
      json j = to_json(check_godelle(sys));
      j["command"] = "dynsys check";
      j["status"] = "ok";
      return {j, 0};
    }

    if (*batch) {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
      std::vector<std::string> lines;
      for (std::string line; std::getline(in, line);) lines.push_back(line);
      if (!lines.empty() && lines.back().empty()) lines.pop_back();
      auto records = serial ? run_batch_serial(lines, derivation, field, depth) : run_batch(lines, derivation, field, depth);
      return {json(records), 0, true};
    }
  } catch (const Error& e) {
    return failure(command, e);
  }
  return usage_error(command, "no command");
}

std::vector<json> run_batch(const std::vector<std::string>& lines, const std::string& derivation,
                            const std::string& field, int depth) {
  std::vector<json> records(lines.size());
  const int count = static_cast<int>(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    json r = run_stable(lines[i], derivation, field, depth).output;
    r["line"] = i + 1;
    records[i] = std::move(r);
  }
  return records;
}

std::vector<json> run_batch_serial(const std::vector<std::string>& lines, const std::string& derivation,
                                   const std::string& field, int depth) {
  std::vector<json> records;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    json r = run_stable(lines[i], derivation, field, depth).output;
    r["line"] = i + 1;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace stab
