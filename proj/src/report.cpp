#include "sturmian/report.hpp"

#include "sturmian/approx.hpp"
#include "sturmian/spectrum.hpp"
#include "sturmian/words.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sturmian {
namespace {

std::string num(double v) {
  if (std::isnan(v)) return {};
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json dbl(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json config_json(const RunConfig& cfg) {
  Json j;
  j["slope"] = SlopeSequence::parse(cfg.slope).spec();
  j["a"] = cfg.a;
  j["b"] = cfg.b;
  j["depth"] = cfg.depth;
  j["lmax"] = cfg.lmax;
  j["bits"] = cfg.bits;
  j["digit_budget"] = cfg.digit_budget;
  j["window"] = cfg.window;
  return j;
}

Json rational_json(const Rational& x, unsigned digits = 30) { return QuadReal(x).decimal(digits); }

}  // namespace

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string render_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream out;
  out << "index,quantity,estimate,err_lo,err_hi,target\n";
  for (const auto& r : rows) {
    out << r.index << ',' << r.quantity << ',' << num(r.estimate) << ',' << num(r.err_lo) << ',' << num(r.err_hi)
        << ',' << num(r.target) << '\n';
  }
  return out.str();
}

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json quad_json(const QuadReal& x, unsigned digits) {
  Json j;
  j["radical"] = x.radical();
  j["decimal"] = x.decimal(digits);
  return j;
}

Json bracket_json(const Bracket& b) { return Json::array({dbl(b.lo), dbl(b.hi)}); }

CsvRow csv_row(std::string index, std::string quantity, const Bracket& b, double target) {
  const double mid = b.mid();
  return {std::move(index), std::move(quantity), mid, mid - b.lo, b.hi - mid, target};
}

TailLimit window_tail(const EstimateTable& t, double window) {
  const auto n = static_cast<double>(t.rows.size());
  return t.tail(static_cast<std::size_t>(std::ceil(window * n)));
}

Json table_json(const EstimateTable& t, const TailLimit& tail) {
  Json j;
  j["quantity"] = t.quantity;
  j["limit"] = t.kind == LimitKind::Limsup ? "limsup" : "liminf";
  j["target"] = dbl(t.target);
  Json tj;
  tj["first_index"] = tail.first_index;
  tj["last_index"] = tail.last_index;
  tj["rows"] = tail.rows;
  tj["value"] = bracket_json(tail.value);
  j["tail"] = tj;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["index"] = r.index;
    row["estimate"] = bracket_json(r.estimate);
    row["log10_height"] = dbl(r.log10_height);
    row["cross_check"] = dbl(r.cross_check);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json exponent_report_json(const ExponentReport& rep, double window) {
  Json j;
  j["slope"] = rep.slope_spec;
  j["a"] = rep.alphabet.a;
  j["b"] = rep.alphabet.b;
  j["depth"] = rep.depth;
  j["lmax"] = rep.lmax;
  j["requested_depth"] = rep.requested_depth;
  j["requested_lmax"] = rep.requested_lmax;

  Json sigma;
  sigma["exact"] = rep.sigma.exact ? quad_json(*rep.sigma.exact) : Json(nullptr);
  sigma["estimate"] = rational_json(rep.sigma.estimate);
  sigma["window"] = Json::array({rep.sigma.window_begin + 1, rep.sigma.window_end});
  sigma["unbounded"] = rep.unbounded;
  j["sigma"] = sigma;

  const TheoreticalExponents& th = rep.theoretical;
  const auto maybe = [](const std::optional<QuadReal>& v) {
    return v ? quad_json(*v) : Json("unbounded (no finite limsup)");
  };
  Json theo;
  theo["w2"] = maybe(th.w2);
  theo["w2star"] = maybe(th.w2star);
  theo["lambda2"] = quad_json(th.lambda2);
  theo["hat_w2"] = quad_json(th.hat_w2);
  theo["hat_w2star"] = quad_json(th.hat_w2star);
  theo["hat_lambda2"] = quad_json(th.hat_lambda2);
  j["theoretical"] = theo;

  Json tables = Json::array();
  for (const auto& t : rep.tables) tables.push_back(table_json(t, window_tail(t, window)));
  j["estimates"] = tables;
  // hat w2* coincides with hat w2; no separate estimator.
  j["hat_w2star_estimate"] = "same as hat_w2";

  Json audit = Json::array();
  for (const auto& a : rep.audit) {
    audit.push_back({{"check", a.name}, {"holds", a.holds}, {"equality", a.equality}});
  }
  j["audit"] = audit;
  return j;
}

std::vector<CsvRow> exponent_report_csv(const ExponentReport& rep, double window) {
  std::vector<CsvRow> out;
  for (const auto& t : rep.tables) {
    for (const auto& r : t.rows) out.push_back(csv_row(std::to_string(r.index), t.quantity, r.estimate, t.target));
    const TailLimit tail = window_tail(t, window);
    out.push_back(csv_row("tail", t.quantity, tail.value, t.target));
  }
  return out;
}

Report word_report(const RunConfig& cfg) {
  const SlopeSequence seq = SlopeSequence::parse(cfg.slope);
  const Alphabet alphabet(cfg.a, cfg.b);
  const CharacteristicWord cw(seq, cfg.max_word_len);
  Report rep{envelope("word"), {}};
  rep.json["config"] = config_json(cfg);

  const std::size_t shown = std::min<std::size_t>(200, cfg.max_word_len);
  const Word head = cw.prefix(shown);
  rep.json["prefix"] = {{"length", head.size()}, {"symbols", head.symbols()}, {"letters", head.render(alphabet)}};

  Json blocks = Json::array();
  for (int k = 0; k <= std::min(cfg.depth, cw.max_index()); ++k) {
    Json b;
    b["k"] = k;
    b["s_k"] = k >= 1 ? Json(cw.s(k)) : Json(nullptr);
    b["length"] = cw.length(k);
    b["word"] = cw.length(k) <= 200 ? Json(cw.build(k).symbols()) : Json(nullptr);
    const auto guarded = [](auto&& fn) -> Json {
      try {
        return fn();
      } catch (const ResourceError&) {
        return nullptr;
      } catch (const std::invalid_argument&) {
        return nullptr;
      }
    };
    b["commutation"] = guarded([&]() -> Json { return k >= 1 ? Json(cw.check_commutation(k)) : Json(nullptr); });
    b["power_prefix"] = guarded([&]() -> Json { return Json(cw.check_power_prefix(k)); });
    b["common_prefix_scan"] = guarded([&]() -> Json { return Json(cw.common_prefix_length(k)); });
    b["common_prefix_formula"] = guarded([&]() -> Json { return Json(cw.common_prefix_formula(k)); });
    if (!b["common_prefix_scan"].is_null()) {
      const double scan = b["common_prefix_scan"].get<double>();
      rep.csv.push_back({std::to_string(k), "common_prefix", scan, 0.0, 0.0,
                         b["common_prefix_formula"].get<double>()});
    }
    blocks.push_back(b);
  }
  rep.json["blocks"] = blocks;

  Json pals = Json::array();
  for (std::uint64_t ell = 1; ell <= cfg.lmax; ++ell) {
    const PalindromeIndex idx = cw.decompose(ell);
    Json p;
    p["ell"] = ell;
    p["k"] = idx.k;
    p["t"] = idx.t;
    const std::uint64_t len = cw.palindrome_length(ell);
    p["length"] = len;
    if (len <= cfg.max_word_len && len <= 100000) {
      const Word w = cw.palindromic_prefix(ell);
      p["is_palindrome"] = is_palindrome(w);
      p["is_prefix"] = cw.prefix(w.size()) == w;
    } else {
      p["is_palindrome"] = nullptr;
      p["is_prefix"] = nullptr;
    }
    rep.csv.push_back({std::to_string(ell), "palindrome_length", static_cast<double>(len), 0.0, 0.0, NAN});
    pals.push_back(p);
  }
  rep.json["palindromes"] = pals;
  return rep;
}

Report approx_report(const RunConfig& cfg) {
  const SlopeSequence seq = SlopeSequence::parse(cfg.slope);
  WordMatrices wm(Alphabet(cfg.a, cfg.b), seq, cfg.digit_budget);
  Report rep{envelope("approx"), {}};
  rep.json["config"] = config_json(cfg);

  Json alphas = Json::array();
  for (int k = 2; k <= cfg.depth; ++k) {
    const QuadraticSurd s = alpha_k(wm, k);
    const Bracket ratio_log = log_bound(s.height()) - wm.log_X(k);
    Json a;
    a["k"] = k;
    a["minpoly"] = Json::array({to_decimal(s.c2), to_decimal(s.c1), to_decimal(s.c0)});
    a["height"] = to_decimal(s.height());
    a["X_k"] = to_decimal(wm.X(k));
    a["height_over_X"] = std::exp(ratio_log.mid());
    a["leading_over_X"] = std::exp((log_bound(s.c2) - wm.log_X(k)).mid());
    a["root"] = s.root.decimal(30);
    a["conjugate_gap"] = conjugate_gap(s).decimal(30);
    alphas.push_back(a);
    rep.csv.push_back(csv_row(std::to_string(k), "height_over_X",
                              {std::exp(ratio_log.lo), std::exp(ratio_log.hi)}, NAN));
  }
  rep.json["alpha"] = alphas;

  Json dist = Json::array();
  for (int k = 3; k <= cfg.depth; ++k) {
    const DistanceBracket d = disagreement_distance(wm, k);
    dist.push_back({{"k", k}, {"q_N", to_decimal(d.qN)}, {"log_distance", bracket_json(d.log_distance)}});
    rep.csv.push_back(csv_row(std::to_string(k), "log_distance", d.log_distance, NAN));
  }
  rep.json["distance"] = dist;

  const RealEnclosure xi = xi_enclosure(wm, cfg.bits);
  rep.json["xi"] = {{"bits", cfg.bits}, {"lo", rational_json(xi.lo)}, {"hi", rational_json(xi.hi)}};

  Json triples = Json::array();
  for (std::uint64_t ell = 1; ell <= cfg.lmax; ++ell) {
    const ApproxTriple x = triple_from_index(wm, ell);
    Json t{{"ell", ell},
           {"x", Json::array({to_decimal(x.x0), to_decimal(x.x1), to_decimal(x.x2)})},
           {"det", to_decimal(x.det())}};
    // L(x) needs xi finer than about 1/x0^2; null once --bits is too coarse.
    try {
      const RealEnclosure L = L_value(x, xi);
      const Bracket log_l{log_bound(L.lo).lo, log_bound(L.hi).hi};
      t["log_L"] = bracket_json(log_l);
      if (x.height() > 1) {
        const Bracket ratio = (-log_l) / log_bound(x.height());
        t["minus_log_L_over_log_height"] = bracket_json(ratio);
        rep.csv.push_back(csv_row(std::to_string(ell), "minus_log_L_over_log_height", ratio, 1.0));
      }
    } catch (const PrecisionError&) {
      t["log_L"] = nullptr;
    }
    triples.push_back(t);
  }
  rep.json["triples"] = triples;

  Json lines = Json::array();
  for (int k = 3; k < cfg.depth; ++k) {
    const std::uint64_t ell_k = ell_of(seq, k);
    const BigInt d3 = det3(triple_from_index(wm, ell_k), triple_from_index(wm, ell_k + 1),
                           triple_from_index(wm, ell_k + 2));
    Json rec = Json::array();
    for (std::uint64_t t = 0; t < seq.term(static_cast<std::uint64_t>(k) + 1); ++t) {
      const RecurrenceCheck c = ch_recurrence_check(wm, k, t);
      rec.push_back({{"t", t}, {"holds", c.holds}, {"epsilon", c.epsilon},
                     {"epsilon_is_minus_det", c.matches_cayley_hamilton}});
    }
    lines.push_back({{"k", k},
                     {"det3", to_decimal(d3)},
                     {"collinear", check_collinearity(wm, k)},
                     {"recurrence", rec}});
    rep.csv.push_back({std::to_string(k), "det3", d3.get_d(), 0.0, 0.0,
                       std::fabs(static_cast<double>(cfg.b) - static_cast<double>(cfg.a))});
  }
  rep.json["lines"] = lines;
  return rep;
}

Report exponents_report(const RunConfig& cfg) {
  const SlopeSequence seq = SlopeSequence::parse(cfg.slope);
  const ExponentReport er = exponent_report(Alphabet(cfg.a, cfg.b), seq, cfg.depth, cfg.lmax, cfg.digit_budget);
  Report rep{envelope("exponents"), exponent_report_csv(er, cfg.window)};
  rep.json["config"] = config_json(cfg);
  rep.json["report"] = exponent_report_json(er, cfg.window);
  return rep;
}

Report spectrum_report(const RunConfig& cfg) {
  Report rep{envelope("spectrum"), {}};
  Json rows = Json::array();
  for (const auto& r : spectrum_table(cfg.rows)) {
    rows.push_back({{"n", r.n},
                    {"sigma", quad_json(r.sigma)},
                    {"hat_w2", quad_json(r.hat_w2)},
                    {"hat_lambda2", quad_json(r.hat_lambda2)}});
    const auto point = [](const QuadReal& x) { return Bracket::point(x.to_double()); };
    rep.csv.push_back(csv_row(std::to_string(r.n), "sigma", point(r.sigma), NAN));
    rep.csv.push_back(csv_row(std::to_string(r.n), "hat_w2", point(r.hat_w2), NAN));
    rep.csv.push_back(csv_row(std::to_string(r.n), "hat_lambda2", point(r.hat_lambda2), NAN));
  }
  rep.json["rows"] = rows;
  const RealEnclosure s = s_limit(11);
  rep.json["s_limit"] = {{"digits", 11}, {"lo", rational_json(s.lo)}, {"hi", rational_json(s.hi)}};
  rep.csv.push_back(csv_row("limit", "s", {s.lo.get_d(), s.hi.get_d()}, NAN));
  return rep;
}

Report beta_report(const RunConfig& cfg) {
  const SlopeSequence seq = SlopeSequence::parse(cfg.slope);
  const BetaEstimate be = estimate_w1_beta(seq, cfg.terms);
  Report rep{envelope("beta"), {}};
  rep.json["config"] = {{"slope", seq.spec()}, {"terms", cfg.terms}, {"window", cfg.window}};
  Json q = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(50, be.certified_quotients.size()); ++i) {
    q.push_back(to_decimal(be.certified_quotients[i]));
  }
  rep.json["certified_quotients"] = {{"count", be.certified_quotients.size()}, {"first", q}};
  const TailLimit tail = window_tail(be.table, cfg.window);
  rep.json["w1"] = table_json(be.table, tail);
  for (const auto& r : be.table.rows) {
    rep.csv.push_back(csv_row(std::to_string(r.index), "w1_beta", r.estimate, be.table.target));
  }
  rep.csv.push_back(csv_row("tail", "w1_beta", tail.value, be.table.target));
  return rep;
}

}  // namespace sturmian
