// guessdec: Monte-Carlo simulation, complexity analysis, and single-shot
// decoding for guessing-based decoders (GRAND / GCD) on short binary codes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "guessdec/montecarlo.hpp"
#include "guessdec/soft_output.hpp"

namespace gd = guessdec;

namespace {

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "cannot parse '" + tok + "' as a number");
    }
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

struct ChannelArg {
  gd::ChannelKind kind = gd::ChannelKind::awgn;
  std::vector<double> points;
};

// "awgn:0,1,2,3" (Eb/N0 grid in dB; code rate is taken from the code) or
// "bsc:0.01,0.02".
ChannelArg parse_channel(const std::string& s) {
  ChannelArg out;
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--channel", "expected awgn:<ebn0_list> or bsc:<p_list>");
  const std::string kind = s.substr(0, colon);
  if (kind == "awgn")
    out.kind = gd::ChannelKind::awgn;
  else if (kind == "bsc")
    out.kind = gd::ChannelKind::bsc;
  else
    throw CLI::ValidationError("--channel", "unknown channel '" + kind + "'");
  out.points = parse_list(s.substr(colon + 1), "--channel");
  return out;
}

// "random:n,k,seed" or a file path (format from --code-format, default by
// extension: *.alist -> alist, else dense text).
gd::LinearCode parse_code(const std::string& s, const std::string& format) {
  if (s.rfind("random:", 0) == 0) {
    const auto vals = parse_list(s.substr(7), "--code");
    if (vals.size() != 3)
      throw CLI::ValidationError("--code", "random spec needs n,k,seed");
    return gd::random_linear_code(static_cast<std::size_t>(vals[0]),
                                  static_cast<std::size_t>(vals[1]),
                                  static_cast<uint64_t>(vals[2]));
  }
  gd::CodeFormat fmt = gd::CodeFormat::dense_text;
  if (format == "alist" || (format == "auto" && s.size() > 6 && s.ends_with(".alist")))
    fmt = gd::CodeFormat::alist;
  return gd::load_code(s, fmt);
}

gd::PatternOrder parse_order(const std::string& s) {
  if (s == "hamming") return gd::PatternOrder::hamming;
  if (s == "soft") return gd::PatternOrder::soft;
  if (s == "orb") return gd::PatternOrder::orb;
  throw CLI::ValidationError("--order", "unknown order '" + s + "'");
}

gd::StopKind parse_stop(const std::string& s) {
  if (s == "membership") return gd::StopKind::membership;
  if (s == "trivial") return gd::StopKind::trivial;
  if (s == "dai") return gd::StopKind::dai;
  if (s == "budget") return gd::StopKind::budget_only;
  throw CLI::ValidationError("--stop", "unknown stop rule '" + s + "'");
}

void write_table(const gd::Table& table, const std::string& out, const std::string& format) {
  const gd::ReportFormat fmt =
      format == "json" ? gd::ReportFormat::json : gd::ReportFormat::csv;
  if (out.empty())
    std::cout << gd::render_report(table, fmt);
  else
    gd::emit_report(table, fmt, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guessing-based decoding toolkit (GRAND / GCD)"};
  app.require_subcommand(1);

  // ---- shared option storage ----
  std::string code_spec, code_format = "auto", channel_spec, out_path, format = "csv";
  std::string decoder = "grand", order = "soft", stop = "membership";
  uint64_t l_max = 1000000, min_errors = 100, max_frames = 1000000, seed = 1;
  int workers = 0;

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo FER / query-count simulation");
  sim->add_option("--code", code_spec, "code file path or random:n,k,seed")->required();
  sim->add_option("--code-format", code_format, "dense | alist | auto")
      ->default_str("auto")
      ->check(CLI::IsMember({"dense", "alist", "auto"}));
  sim->add_option("--channel", channel_spec, "awgn:<ebn0_db_list> or bsc:<p_list>")->required();
  sim->add_option("--decoder", decoder, "grand | gcd")
      ->default_str("grand")
      ->check(CLI::IsMember({"grand", "gcd"}));
  sim->add_option("--order", order, "hamming | soft | orb")->default_str("soft");
  sim->add_option("--stop", stop, "membership | trivial | dai | budget")
      ->default_str("membership");
  sim->add_option("--lmax", l_max, "query budget per frame")->default_val(1000000);
  sim->add_option("--min-errors", min_errors, "frame errors before a point stops")
      ->default_val(100);
  sim->add_option("--max-frames", max_frames, "frame cap per point")->default_val(1000000);
  sim->add_option("--seed", seed, "master seed")->default_val(1);
  sim->add_option("--workers", workers, "worker threads (0 = all, 1 = serial)")->default_val(0);
  sim->add_option("--out", out_path, "output path (default: stdout)");
  sim->add_option("--format", format, "csv | json")
      ->default_str("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  std::size_t ana_n = 128;
  std::string rates_spec;
  double epsilon = 1e-5, alpha = 1.0;
  std::size_t samples = 20000, rcu_samples = 10000;
  bool budget = false;

  auto* ana = app.add_subcommand("analyze", "saddle-point query / budget / ops sweep over rates");
  ana->add_option("--n", ana_n, "block length")->default_val(128);
  ana->add_option("--rates", rates_spec, "comma-separated rate list, e.g. 0.75,0.875")
      ->required();
  ana->add_option("--epsilon", epsilon, "target RCU error probability")->default_val(1e-5);
  ana->add_option("--alpha", alpha, "budget FER-inflation fraction")->default_val(1.0);
  ana->add_option("--samples", samples, "LLR draws for saddle-point averages")
      ->default_val(20000);
  ana->add_option("--rcu-samples", rcu_samples, "LLR draws per RCU evaluation")
      ->default_val(10000);
  ana->add_flag("--budget", budget, "also compute minimum-budget columns (needs samples >= 1/(alpha*epsilon))");
  ana->add_option("--seed", seed, "master seed")->default_val(1);
  ana->add_option("--out", out_path, "output path (default: stdout)");
  ana->add_option("--format", format, "csv | json")
      ->default_str("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  std::size_t rcu_n = 128, rcu_k = 105;
  auto* rcu = app.add_subcommand("rcu", "Monte-Carlo RCU bound over an operating-point grid");
  rcu->add_option("--n", rcu_n, "block length")->required();
  rcu->add_option("--k", rcu_k, "code dimension")->required();
  rcu->add_option("--channel", channel_spec, "awgn:<ebn0_db_list> or bsc:<p_list>")->required();
  rcu->add_option("--samples", samples, "LLR draws per point")->default_val(20000);
  rcu->add_option("--seed", seed, "master seed")->default_val(1);
  rcu->add_option("--out", out_path, "output path (default: stdout)");
  rcu->add_option("--format", format, "csv | json")
      ->default_str("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string llrs_spec;
  bool soft_out = false;
  std::size_t soft_list = 16;
  auto* dec = app.add_subcommand("decode", "decode one LLR vector, printing a JSON result");
  dec->add_option("--code", code_spec, "code file path or random:n,k,seed")->required();
  dec->add_option("--code-format", code_format, "dense | alist | auto")
      ->default_str("auto")
      ->check(CLI::IsMember({"dense", "alist", "auto"}));
  dec->add_option("--llrs", llrs_spec, "comma-separated LLR vector of length n")->required();
  dec->add_option("--decoder", decoder, "grand | gcd")
      ->default_str("grand")
      ->check(CLI::IsMember({"grand", "gcd"}));
  dec->add_option("--order", order, "hamming | soft | orb")->default_str("soft");
  dec->add_option("--stop", stop, "membership | trivial | dai | budget")
      ->default_str("membership");
  dec->add_option("--lmax", l_max, "query budget")->default_val(1000000);
  dec->add_flag("--soft", soft_out, "also emit block posteriors and bit LLRs");
  dec->add_option("--soft-list", soft_list, "candidates kept for soft output")->default_val(16);
  dec->add_option("--out", out_path, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      const gd::LinearCode code = parse_code(code_spec, code_format);
      const ChannelArg ch = parse_channel(channel_spec);
      gd::SimConfig cfg;
      cfg.decoder = decoder == "gcd" ? gd::DecoderKind::gcd : gd::DecoderKind::grand;
      cfg.order = parse_order(order);
      cfg.stop = parse_stop(stop);
      if (cfg.decoder == gd::DecoderKind::gcd && cfg.stop == gd::StopKind::membership)
        cfg.stop = gd::StopKind::trivial;  // gcd default when --stop was left at membership
      cfg.l_max = l_max;
      cfg.channel = ch.kind;
      cfg.points = ch.points;
      cfg.max_frames = max_frames;
      cfg.min_errors = min_errors;
      cfg.seed = seed;
      cfg.workers = workers;
      write_table(gd::to_table(gd::run_simulation(code, cfg)), out_path, format);
    } else if (ana->parsed()) {
      gd::AnalysisConfig cfg;
      cfg.n = ana_n;
      cfg.rates = parse_list(rates_spec, "--rates");
      cfg.epsilon = epsilon;
      cfg.alpha = alpha;
      cfg.samples = samples;
      cfg.rcu_samples = rcu_samples;
      cfg.seed = seed;
      cfg.compute_budget = budget;
      write_table(gd::run_analysis(cfg), out_path, format);
    } else if (rcu->parsed()) {
      const ChannelArg ch = parse_channel(channel_spec);
      const double rate = static_cast<double>(rcu_k) / static_cast<double>(rcu_n);
      gd::Table t;
      t.header = {"point", "rcu"};
      for (double p : ch.points) {
        const gd::ChannelSpec spec = ch.kind == gd::ChannelKind::awgn
                                         ? gd::ChannelSpec::awgn(p, rate)
                                         : gd::ChannelSpec::bsc(p);
        t.rows.push_back({p, gd::rcu_bound(rcu_n, rcu_k, spec, samples, seed)});
      }
      write_table(t, out_path, format);
    } else if (dec->parsed()) {
      const gd::LinearCode code = parse_code(code_spec, code_format);
      const std::vector<double> lambda = parse_list(llrs_spec, "--llrs");
      if (lambda.size() != code.n())
        throw std::invalid_argument("decode: expected " + std::to_string(code.n()) + " LLRs, got " +
                                    std::to_string(lambda.size()));
      const gd::ReceivedWord rw = gd::received_from_llrs(lambda);
      const gd::PatternOrder ord = parse_order(order);
      const gd::StopKind sk = parse_stop(stop);

      gd::DecodeOutcome outc;
      std::optional<gd::SoftOutput> so;
      if (decoder == "grand") {
        gd::SoftCollect collect{soft_list};
        outc = gd::grand(code, rw, ord, l_max, soft_out ? &collect : nullptr);
        if (soft_out) so = gd::grand_soft_output(outc.visited, outc.hits, rw, code.n(), code.k());
      } else {
        gd::StopRule rule = gd::StopRule::trivial();
        if (sk == gd::StopKind::dai)
          rule = gd::make_dai_rule(code, rw);
        else if (sk == gd::StopKind::budget_only)
          rule = gd::StopRule::budget_only();
        outc = gd::gcd(code, rw, ord, l_max, rule, soft_out ? soft_list : 0);
        if (soft_out) {
          std::vector<gd::BitVec> teps;
          for (const auto& v : outc.visited) teps.push_back(v.pattern);
          so = gd::gcd_soft_output(code, rw, teps);
        }
      }

      nlohmann::json j;
      j["codeword"] = outc.codeword_hat.to_string();
      j["queries_used"] = outc.queries_used;
      j["found"] = outc.found;
      j["ml_certified"] = outc.ml_certified;
      j["budget_exhausted"] = outc.budget_exhausted;
      j["tep_soft_weight"] = outc.tep_soft_weight;
      if (so) {
        nlohmann::json cand = nlohmann::json::array();
        for (const auto& [cw, p] : so->block_posteriors)
          cand.push_back({{"codeword", cw.to_string()}, {"posterior", p}});
        j["block_posteriors"] = std::move(cand);
        j["bit_llrs"] = so->bit_llrs;
        j["residual"] = so->residual;
      }
      if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << j.dump(2) << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
