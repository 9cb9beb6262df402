// Command-line front end: exact evaluation of the nested q-series, the
// duality involution, identity verification (single checks and grid
// sweeps), duality tables, and truncations of the infinite-n series.
//
// Exit codes: 0 success / identity holds, 1 identity fails, 2 usage or
// parse error, 3 inconclusive (truncation residual exceeded its bound).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qharmonic/composition.hpp"
#include "qharmonic/limits.hpp"
#include "qharmonic/qratfun.hpp"
#include "qharmonic/rational.hpp"
#include "qharmonic/sums.hpp"
#include "qharmonic/verify.hpp"
#include "qharmonic/word.hpp"

namespace {

using qharmonic::Composition;
using qharmonic::IdentityId;
using qharmonic::Params;
using qharmonic::Rational;
using qharmonic::Report;
using qharmonic::SumKind;
using qharmonic::Verdict;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

SumKind parse_eval_kind(const std::string& kind) {
  if (kind == "Zw") return SumKind::z_weak;
  if (kind == "Aw") return SumKind::a_weak;
  if (kind == "Ww") return SumKind::w_weak;
  if (kind == "Zs") return SumKind::z_strict;
  if (kind == "As") return SumKind::a_strict;
  throw std::invalid_argument("unknown --kind '" + kind +
                              "' (expected Zw, Aw, Ww, Zs or As)");
}

int verdict_exit(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return kExitOk;
    case Verdict::fails:
      return kExitFails;
    case Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitUsage;
}

/// RFC 4180: fields containing comma, quote, CR or LF are wrapped in
/// double quotes with embedded quotes doubled.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string coeff_line(const char* label, const qharmonic::QPoly& poly) {
  std::string line = label;
  line += ":";
  if (poly.is_zero()) {
    line += " 0";
    return line;
  }
  for (const Rational& c : poly.coeffs()) {
    line += " " + qharmonic::to_string(c);
  }
  return line;
}

std::string report_text(const Report& report) {
  std::string line = qharmonic::identity_tag(report.id) + " " +
                     qharmonic::verdict_tag(report.verdict) + " " +
                     qharmonic::method_tag(report.method);
  for (const auto& [key, value] : report.params.entries()) {
    line += " " + key + "=" + value;
  }
  if (report.seed) line += " seed=" + std::to_string(*report.seed);
  if (report.residual) {
    line += " residual=" + qharmonic::to_string(*report.residual);
  }
  if (report.tail_bound) {
    line += " tail_bound=" + qharmonic::to_string(*report.tail_bound);
  }
  if (report.witness) line += " witness=" + *report.witness;
  return line;
}

const char* kReportCsvHeader =
    "id,verdict,method,params,seed,residual,tail_bound,witness";

std::string report_csv_row(const Report& report) {
  std::string params_cell;
  for (const auto& [key, value] : report.params.entries()) {
    if (!params_cell.empty()) params_cell += "; ";
    params_cell += key + "=" + value;
  }
  std::vector<std::string> fields = {
      qharmonic::identity_tag(report.id),
      qharmonic::verdict_tag(report.verdict),
      qharmonic::method_tag(report.method),
      params_cell,
      report.seed ? std::to_string(*report.seed) : "",
      report.residual ? qharmonic::to_string(*report.residual) : "",
      report.tail_bound ? qharmonic::to_string(*report.tail_bound) : "",
      report.witness ? *report.witness : ""};
  std::string row;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ",";
    row += csv_field(fields[i]);
  }
  return row;
}

/// Aggregate exit code for a batch of reports: any failure wins, then any
/// inconclusive, then success.
int reports_exit(const std::vector<Report>& reports) {
  bool inconclusive = false;
  for (const Report& r : reports) {
    if (r.verdict == Verdict::fails) return kExitFails;
    if (r.verdict == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? kExitInconclusive : kExitOk;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + out_path + "'");
  }
  out << text;
}

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 20260822;
  bool seed_given = false;
};

/// QHARMONIC_SEED, when set, overrides --seed.
void apply_seed_env(CommonOptions& common) {
  const char* env = std::getenv("QHARMONIC_SEED");
  if (env == nullptr) return;
  try {
    size_t used = 0;
    const std::string text(env);
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    common.seed = static_cast<std::uint64_t>(value);
    common.seed_given = true;
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "QHARMONIC_SEED must be an unsigned integer, got '" +
        std::string(env) + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact finite multiple harmonic q-series: evaluation, duality, "
      "identity verification and infinite-n truncations"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", common.out_path,
                 "write output to this file instead of stdout");
  CLI::Option* seed_opt = app.add_option(
      "--seed", common.seed,
      "seed for sampled campaigns (QHARMONIC_SEED overrides)");

  // eval ------------------------------------------------------------
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate one nested sum as a canonical rational function");
  eval->fallthrough();
  std::string eval_kind;
  std::string eval_s;
  int eval_n = 0;
  std::string eval_q;
  eval->add_option("--kind", eval_kind, "Zw | Aw | Ww | Zs | As")
      ->required();
  eval->add_option("--s", eval_s, "argument composition")->required();
  eval->add_option("--n", eval_n, "upper summation bound")->required();
  eval->add_option("--q", eval_q,
                   "evaluate exactly at q = p/r instead of symbolically");

  // dual ------------------------------------------------------------
  CLI::App* dual_cmd =
      app.add_subcommand("dual", "apply the duality involution");
  dual_cmd->fallthrough();
  std::string dual_s;
  dual_cmd->add_option("--s", dual_s, "composition with entries >= 1")
      ->required();

  // verify ----------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run one identity check");
  verify->fallthrough();
  std::string verify_id;
  verify->add_option("--id", verify_id, "identity tag")->required();
  std::string v_s, v_a, v_b, v_c, v_z, v_q, v_x, v_y;
  int v_n = 0, v_m = 0, v_N = 0, v_k = 0, v_trials = 0, v_max_n = 0;
  CLI::Option* o_s = verify->add_option("--s", v_s, "composition");
  CLI::Option* o_a = verify->add_option("--a", v_a, "parameter a");
  CLI::Option* o_b = verify->add_option("--b", v_b, "parameter b");
  CLI::Option* o_c = verify->add_option("--c", v_c, "parameter c");
  CLI::Option* o_z = verify->add_option("--z", v_z, "parameter z");
  CLI::Option* o_q = verify->add_option("--q", v_q, "rational q = p/r");
  CLI::Option* o_x = verify->add_option("--x", v_x, "rational sample x");
  CLI::Option* o_y = verify->add_option("--y", v_y, "rational sample y");
  CLI::Option* o_n = verify->add_option("--n", v_n, "upper bound n");
  CLI::Option* o_m = verify->add_option("--m", v_m, "depth m");
  CLI::Option* o_N = verify->add_option("--N", v_N, "truncation terms");
  CLI::Option* o_k = verify->add_option("--k", v_k, "inner index k");
  CLI::Option* o_trials =
      verify->add_option("--trials", v_trials, "campaign trials");
  CLI::Option* o_max_n =
      verify->add_option("--max-n", v_max_n, "campaign n bound");
  bool probe_non_dual = false;
  verify
      ->add_flag("--probe-non-dual", probe_non_dual,
                 "compare against the undualized argument (known-failing)")
      ->group("");  // hidden: exercises the honest fails / inconclusive paths

  // sweep -----------------------------------------------------------
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run one identity over its parameter grid");
  sweep_cmd->fallthrough();
  std::string sweep_id;
  qharmonic::SweepOptions sweep_options;
  sweep_cmd->add_option("--id", sweep_id, "identity tag")->required();
  sweep_cmd->add_option("--max-weight", sweep_options.max_weight,
                        "largest composition weight swept")
      ->capture_default_str();
  sweep_cmd->add_option("--max-n", sweep_options.max_n, "largest n swept")
      ->capture_default_str();
  sweep_cmd->add_option("--max-m", sweep_options.max_m, "largest depth swept")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--max-length", sweep_options.max_length,
                   "composition length cap (0 = none)")
      ->capture_default_str();
  sweep_cmd->add_option("--trials", sweep_options.trials, "campaign trials")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--truncation-terms", sweep_options.truncation_terms,
                   "outer terms kept in series truncations")
      ->capture_default_str();
  std::string sweep_q = "1/2";
  sweep_cmd->add_option("--q", sweep_q, "rational q = p/r for truncations")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_options.threads, "worker threads")
      ->capture_default_str();

  // table -----------------------------------------------------------
  CLI::App* table =
      app.add_subcommand("table", "emit the duality table for one n");
  table->fallthrough();
  std::string table_id = "THEOREM1";
  int table_max_weight = 4;
  int table_n = 5;
  table->add_option("--id", table_id, "identity tag (THEOREM1 only)")
      ->capture_default_str();
  table
      ->add_option("--max-weight", table_max_weight,
                   "largest composition weight listed")
      ->capture_default_str();
  table->add_option("--n", table_n, "upper summation bound")
      ->capture_default_str();

  // limit -----------------------------------------------------------
  CLI::App* limit =
      app.add_subcommand("limit", "truncate an infinite-n series");
  limit->fallthrough();
  std::string limit_kind;
  std::string limit_s;
  std::string limit_q;
  int limit_N = 0;
  limit->add_option("--kind", limit_kind, "Z | A | qzeta")->required();
  limit->add_option("--s", limit_s, "argument composition")->required();
  limit->add_option("--q", limit_q, "rational q = p/r in (0,1)")->required();
  limit->add_option("--N", limit_N, "outer terms kept")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    common.seed_given = seed_opt->count() > 0;
    apply_seed_env(common);
    std::ostringstream out;
    int exit_code = kExitOk;

    if (eval->parsed()) {
      const SumKind kind = parse_eval_kind(eval_kind);
      const Composition s = qharmonic::parse_composition(eval_s);
      const qharmonic::QRatFun value = qharmonic::eval_sum(kind, s, eval_n);
      if (!eval_q.empty()) {
        const Rational point = qharmonic::parse_rational(eval_q);
        const Rational at = value.eval_at(point);
        if (common.format == "json") {
          nlohmann::ordered_json j;
          j["kind"] = eval_kind;
          j["s"] = s.to_string();
          j["n"] = eval_n;
          j["q"] = qharmonic::to_string(point);
          j["value"] = qharmonic::to_string(at);
          out << j.dump(2) << "\n";
        } else {
          out << qharmonic::to_string(at) << "\n";
        }
      } else if (common.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = eval_kind;
        j["s"] = s.to_string();
        j["n"] = eval_n;
        nlohmann::ordered_json num = nlohmann::ordered_json::array();
        for (const Rational& c : value.num().coeffs()) {
          num.push_back(qharmonic::to_string(c));
        }
        if (num.empty()) num.push_back("0");
        nlohmann::ordered_json den = nlohmann::ordered_json::array();
        for (const Rational& c : value.den().coeffs()) {
          den.push_back(qharmonic::to_string(c));
        }
        j["num"] = num;
        j["den"] = den;
        out << j.dump(2) << "\n";
      } else if (common.format == "csv") {
        throw std::invalid_argument("eval supports --format text or json");
      } else {
        out << coeff_line("num", value.num()) << "\n"
            << coeff_line("den", value.den()) << "\n";
      }
    } else if (dual_cmd->parsed()) {
      const Composition s = qharmonic::parse_composition(dual_s);
      const Composition d = qharmonic::dual(s);
      const qharmonic::Word word = qharmonic::to_word(s);
      const qharmonic::Word dword = qharmonic::word_dual(word);
      if (common.format == "json") {
        nlohmann::ordered_json j;
        j["s"] = s.to_string();
        j["dual"] = d.to_string();
        j["word"] = word.to_string();
        j["dual_word"] = dword.to_string();
        out << j.dump(2) << "\n";
      } else if (common.format == "csv") {
        throw std::invalid_argument("dual supports --format text or json");
      } else {
        out << "dual: " << d.to_string() << "\n"
            << "word: " << word.to_string() << "\n"
            << "dual word: " << dword.to_string() << "\n";
      }
    } else if (verify->parsed()) {
      const std::optional<IdentityId> id =
          qharmonic::parse_identity_tag(verify_id);
      if (!id) {
        throw std::invalid_argument("unknown identity tag '" + verify_id +
                                    "'");
      }
      Report report;
      if (probe_non_dual) {
        if (*id == IdentityId::theorem1) {
          report = qharmonic::probe_theorem1_undualized(
              qharmonic::parse_composition(v_s), v_n);
        } else if (*id == IdentityId::cor_limit_ninf) {
          report = qharmonic::probe_limit_undualized(
              qharmonic::parse_composition(v_s),
              qharmonic::parse_rational(v_q), v_N);
        } else {
          throw std::invalid_argument(
              "--probe-non-dual applies to THEOREM1 or COR_LIMIT_NINF");
        }
      } else {
        Params params;
        if (o_s->count()) params.set("s", v_s);
        if (o_a->count()) params.set("a", v_a);
        if (o_b->count()) params.set("b", v_b);
        if (o_c->count()) params.set("c", v_c);
        if (o_z->count()) params.set("z", v_z);
        if (o_q->count()) params.set("q", v_q);
        if (o_x->count()) params.set("x", v_x);
        if (o_y->count()) params.set("y", v_y);
        if (o_n->count()) params.set("n", v_n);
        if (o_m->count()) params.set("m", v_m);
        if (o_N->count()) params.set("N", v_N);
        if (o_k->count()) params.set("k", v_k);
        if (o_trials->count()) params.set("trials", v_trials);
        if (o_max_n->count()) params.set("max_n", v_max_n);
        const bool campaign =
            (*id == IdentityId::prodinger_pair && !o_s->count()) ||
            (*id == IdentityId::fulas && !o_a->count() && !o_b->count() &&
             !o_c->count() && !o_z->count());
        if (campaign && !params.has("seed")) params.set("seed", common.seed);
        report = qharmonic::check_identity(*id, params);
      }
      if (common.format == "json") {
        out << qharmonic::report_to_json(report) << "\n";
      } else if (common.format == "csv") {
        out << kReportCsvHeader << "\n" << report_csv_row(report) << "\n";
      } else {
        out << report_text(report) << "\n";
      }
      exit_code = verdict_exit(report.verdict);
    } else if (sweep_cmd->parsed()) {
      const std::optional<IdentityId> id =
          qharmonic::parse_identity_tag(sweep_id);
      if (!id) {
        throw std::invalid_argument("unknown identity tag '" + sweep_id +
                                    "'");
      }
      sweep_options.q0 = qharmonic::parse_rational(sweep_q);
      sweep_options.seed = common.seed;
      const std::vector<Report> reports =
          qharmonic::sweep(*id, sweep_options);
      if (common.format == "json") {
        out << qharmonic::reports_to_json(reports) << "\n";
      } else if (common.format == "csv") {
        out << kReportCsvHeader << "\n";
        for (const Report& r : reports) out << report_csv_row(r) << "\n";
      } else {
        for (const Report& r : reports) out << report_text(r) << "\n";
        size_t holds = 0, fails = 0, inconclusive = 0;
        for (const Report& r : reports) {
          if (r.verdict == Verdict::holds) ++holds;
          if (r.verdict == Verdict::fails) ++fails;
          if (r.verdict == Verdict::inconclusive) ++inconclusive;
        }
        out << reports.size() << " checks: " << holds << " hold, " << fails
            << " fail, " << inconclusive << " inconclusive\n";
      }
      exit_code = reports_exit(reports);
    } else if (table->parsed()) {
      if (table_id != "THEOREM1") {
        throw std::invalid_argument("table supports --id THEOREM1 only");
      }
      bool all_equal = true;
      struct Row {
        std::string s, d, z, a;
        bool equal;
      };
      std::vector<Row> rows;
      for (const Composition& s :
           qharmonic::compositions_up_to_weight(table_max_weight)) {
        const qharmonic::QRatFun z =
            qharmonic::eval_sum(SumKind::z_weak, s, table_n);
        const qharmonic::QRatFun a =
            qharmonic::eval_sum(SumKind::a_weak, qharmonic::dual(s), table_n);
        const bool equal = z == a;
        all_equal = all_equal && equal;
        rows.push_back({s.to_string(), qharmonic::dual(s).to_string(),
                        z.to_string(), a.to_string(), equal});
      }
      if (common.format == "json") {
        nlohmann::ordered_json array = nlohmann::ordered_json::array();
        for (const Row& r : rows) {
          nlohmann::ordered_json j;
          j["s"] = r.s;
          j["dual"] = r.d;
          j["Z"] = r.z;
          j["A"] = r.a;
          j["equal"] = r.equal;
          array.push_back(j);
        }
        out << array.dump(2) << "\n";
      } else if (common.format == "csv") {
        out << "s,dual,Z,A,equal\n";
        for (const Row& r : rows) {
          out << csv_field(r.s) << "," << csv_field(r.d) << ","
              << csv_field(r.z) << "," << csv_field(r.a) << ","
              << (r.equal ? "true" : "false") << "\n";
        }
      } else {
        for (const Row& r : rows) {
          out << "s=" << r.s << " | dual=" << r.d << " | Z=" << r.z
              << " | A=" << r.a << " | equal=" << (r.equal ? "true" : "false")
              << "\n";
        }
      }
      exit_code = all_equal ? kExitOk : kExitFails;
    } else if (limit->parsed()) {
      const Composition s = qharmonic::parse_composition(limit_s);
      const Rational q0 = qharmonic::parse_rational(limit_q);
      qharmonic::TruncationResult result;
      if (limit_kind == "Z") {
        result = qharmonic::truncated_limit(SumKind::z_weak, s, q0, limit_N);
      } else if (limit_kind == "A") {
        result = qharmonic::truncated_limit(SumKind::a_weak, s, q0, limit_N);
      } else if (limit_kind == "qzeta") {
        result = qharmonic::qzeta_truncated(s, q0, limit_N);
      } else {
        throw std::invalid_argument("unknown --kind '" + limit_kind +
                                    "' (expected Z, A or qzeta)");
      }
      if (common.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = limit_kind;
        j["s"] = s.to_string();
        j["q"] = qharmonic::to_string(q0);
        j["value"] = qharmonic::to_string(result.value);
        j["terms_used"] = result.terms_used;
        j["tail_bound"] = qharmonic::to_string(result.tail_bound);
        out << j.dump(2) << "\n";
      } else if (common.format == "csv") {
        throw std::invalid_argument("limit supports --format text or json");
      } else {
        out << "value: " << qharmonic::to_string(result.value) << "\n"
            << "terms_used: " << result.terms_used << "\n"
            << "tail_bound: " << qharmonic::to_string(result.tail_bound)
            << "\n";
      }
    }

    emit(out.str(), common.out_path);
    return exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
