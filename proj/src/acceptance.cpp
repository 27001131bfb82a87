#include "sturmian/acceptance.hpp"

#include "sturmian/approx.hpp"
#include "sturmian/spectrum.hpp"
#include "sturmian/words.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

namespace sturmian {
namespace {

// Tally of one named identity across all k / ell it was checked on.
class Tally {
 public:
  void record(const std::string& name, bool ok) {
    auto& [checked, failed] = counts_[name];
    ++checked;
    if (!ok) ++failed;
  }
  bool all_ok() const {
    return std::all_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second.second == 0; });
  }
  std::string failures() const {
    std::string out;
    for (const auto& [name, c] : counts_) {
      if (c.second) out += (out.empty() ? "" : ", ") + name;
    }
    return out;
  }
  Json json() const {
    Json j;
    for (const auto& [name, c] : counts_) j[name] = {{"checked", c.first}, {"failed", c.second}};
    return j;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts_;
};

// Largest k <= want with M_{k + margin} inside the digit budget.
int budget_depth(WordMatrices& wm, int want, int margin) {
  try {
    wm.extend_to(want + margin);
    return want;
  } catch (const ResourceError&) {
    return wm.depth() - margin;
  }
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

Json pair_json(const SlopePair& p) { return {{"slope", p.slope}, {"a", p.a}, {"b", p.b}}; }

std::string pair_name(const SlopePair& p) {
  return p.slope + " (a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) + ")";
}

void check_pair_identities(const SlopePair& p, const AcceptanceConfig& cfg, Tally& tally, Json& data) {
  const SlopeSequence seq = SlopeSequence::parse(p.slope);
  const Alphabet alphabet(p.a, p.b);
  const CharacteristicWord cw(seq, cfg.word_cap);
  WordMatrices wm(alphabet, seq, cfg.digit_budget);
  const int km = budget_depth(wm, cfg.matrix_depth, 1);

  int kw = 0;
  while (kw + 3 <= cw.max_index() && cw.length(kw + 3) <= cfg.word_cap) ++kw;

  for (int k = 0; k <= km; ++k) {
    const BigInt expected = cw.length(k) % 2 == 0 ? 1 : -1;
    tally.record("det(M_k) = (-1)^|m_k|", det2(wm.M(k)) == expected);
    if (cw.length(k) <= 2000) tally.record("matrix(m_k) = M_k", word_to_matrix(cw.build(k), alphabet) == wm.M(k));
  }

  std::int64_t prev_len = -1;
  for (std::uint64_t ell = 1; cw.palindrome_length(ell) <= cfg.word_cap; ++ell) {
    const Word w = cw.palindromic_prefix(ell);
    const bool increasing = static_cast<std::int64_t>(w.size()) > prev_len;
    prev_len = static_cast<std::int64_t>(w.size());
    tally.record("palindromic prefixes", is_palindrome(w) && cw.prefix(w.size()) == w && increasing);
    if (w.size() <= 2000) {
      const ApproxTriple x = triple_from_index(wm, ell);
      tally.record("triple = matrix(palindrome)", x.matrix() == word_to_matrix(w, alphabet));
      tally.record("det(triple) = +-1", x.det() == 1 || x.det() == -1);
    }
  }

  for (int k = 1; k <= kw + 1; ++k) tally.record("commutation", cw.check_commutation(k));
  for (int k = 2; k <= kw; ++k) {
    if (cw.length(k - 1) >= 2) tally.record("power prefix", cw.check_power_prefix(k));
  }
  for (int k = 1; k <= kw; ++k) {
    tally.record("common prefix length", cw.common_prefix_length(k) == cw.common_prefix_formula(k));
  }

  std::size_t ch_total = 0, ch_sign = 0;
  const BigInt ba = BigInt(p.b) - BigInt(p.a);
  for (int k = 3; k < km; ++k) {
    const std::uint64_t ell_k = ell_of(seq, k);
    const BigInt d = det3(triple_from_index(wm, ell_k), triple_from_index(wm, ell_k + 1),
                          triple_from_index(wm, ell_k + 2));
    tally.record("det3 = +-(b-a)", d == ba || d == -ba);
    tally.record("collinearity", check_collinearity(wm, k));
    for (std::uint64_t t = 0; t < seq.term(static_cast<std::uint64_t>(k) + 1); ++t) {
      const RecurrenceCheck c = ch_recurrence_check(wm, k, t);
      tally.record("trace recurrence", c.holds);
      ++ch_total;
      if (c.matches_cayley_hamilton) ++ch_sign;
    }
  }
  for (int k = 1; k < km; ++k) tally.record("height growth", wm.check_height_growth(k));

  // Quasi-multiplicativity on matrices of random factors of m_phi.
  const Word head = cw.prefix(std::min<std::size_t>(cfg.word_cap, 5000));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> len_dist(1, 64);
  for (std::size_t i = 0; i < cfg.quasi_pairs; ++i) {
    const auto factor = [&]() {
      const std::size_t len = len_dist(rng);
      std::uniform_int_distribution<std::size_t> start(0, head.size() - len);
      const std::size_t s = start(rng);
      return Word(std::vector<Letter>(head.letters().begin() + static_cast<std::ptrdiff_t>(s),
                                      head.letters().begin() + static_cast<std::ptrdiff_t>(s + len)));
    };
    const Mat2 m = word_to_matrix(factor(), alphabet);
    const Mat2 n = word_to_matrix(factor(), alphabet);
    tally.record("quasi-multiplicativity", quasi_mult_check(m, n));
  }

  data["word_depth"] = kw + 2;
  data["matrix_depth"] = km;
  data["recurrence_sign_is_minus_det"] = {{"matches", ch_sign}, {"of", ch_total}};
}

std::vector<SlopePair> union_pairs(const AcceptanceConfig& cfg) {
  std::vector<SlopePair> out = cfg.identity_pairs;
  for (const auto& p : cfg.exponent_pairs) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

void AcceptanceConfig::include(const SlopePair& p) {
  if (std::find(identity_pairs.begin(), identity_pairs.end(), p) == identity_pairs.end()) identity_pairs.push_back(p);
  if (std::find(exponent_pairs.begin(), exponent_pairs.end(), p) == exponent_pairs.end()) exponent_pairs.push_back(p);
}

double relative_miss(const Bracket& b, double target) {
  if (!std::isfinite(target)) return std::numeric_limits<double>::infinity();
  const double miss = std::max({0.0, b.lo - target, target - b.hi});
  return miss / std::fabs(target);
}

CriterionResult criterion_identities(const AcceptanceConfig& cfg) {
  CriterionResult r{1, "exact identities", true, {}, Json::array()};
  std::string failures;
  for (const auto& p : cfg.identity_pairs) {
    Tally tally;
    Json data = pair_json(p);
    check_pair_identities(p, cfg, tally, data);
    data["checks"] = tally.json();
    if (!tally.all_ok()) {
      r.passed = false;
      failures += (failures.empty() ? "" : "; ") + pair_name(p) + ": " + tally.failures();
    }
    r.data.push_back(data);
  }
  r.detail = r.passed ? std::to_string(cfg.identity_pairs.size()) + " (alphabet, slope) pairs, all identities exact"
                      : failures;
  return r;
}

CriterionResult criterion_quadratic_heights(const AcceptanceConfig& cfg) {
  CriterionResult r{2, "quadratic approximant heights", true, {}, Json::array()};
  double worst_lower = std::numeric_limits<double>::infinity();
  for (const auto& p : union_pairs(cfg)) {
    const SlopeSequence seq = SlopeSequence::parse(p.slope);
    WordMatrices wm(Alphabet(p.a, p.b), seq, cfg.digit_budget);
    const int depth = budget_depth(wm, cfg.matrix_depth + 4, 0);
    // Pinned window: min(a,b) / (2(ab+1)|a-b|) <= H(alpha_k)/X_k <= 1, the
    // same lower bound for the leading coefficient, and a conjugate gap >= 1.
    const BigInt lower_num = std::min(p.a, p.b);
    const BigInt lower_den = 2 * (BigInt(p.a) * p.b + 1) * ::abs(BigInt(p.a) - BigInt(p.b));
    const double kappa_lo = Rational(lower_num, lower_den).get_d();
    worst_lower = std::min(worst_lower, kappa_lo);
    double h_min = 1e300, h_max = 0, lead_min = 1e300, gap_min = 1e300;
    bool ok = true;
    for (int k = 3; k <= depth; ++k) {
      const QuadraticSurd s = alpha_k(wm, k);
      const BigInt x = wm.X(k);
      const BigInt h = s.height();
      ok = ok && h <= x && h * lower_den >= lower_num * x;
      ok = ok && s.c2 * lower_den >= lower_num * x;
      ok = ok && s.discriminant() >= s.c2 * s.c2;
      const double lx = wm.log_X(k).mid();
      h_min = std::min(h_min, std::exp(log_bound(h).mid() - lx));
      h_max = std::max(h_max, std::exp(log_bound(h).mid() - lx));
      lead_min = std::min(lead_min, std::exp(log_bound(s.c2).mid() - lx));
      gap_min = std::min(gap_min, conjugate_gap(s).to_double());
    }
    if (!ok) {
      r.passed = false;
      r.detail += (r.detail.empty() ? "" : "; ") + pair_name(p) + " leaves the pinned window";
    }
    Json d = pair_json(p);
    d["k_range"] = Json::array({3, depth});
    d["kappa1"] = kappa_lo;
    d["kappa2"] = 1.0;
    d["kappa3"] = kappa_lo;
    d["kappa4"] = 1.0;
    d["observed_height_over_X"] = Json::array({h_min, h_max});
    d["observed_leading_over_X_min"] = lead_min;
    d["observed_gap_min"] = gap_min;
    d["passed"] = ok;
    r.data.push_back(d);
  }
  if (r.passed) {
    r.detail = "H/X, leading/X within pinned windows (kappa1 >= " + fmt("%.4g", worst_lower) +
               "), conjugate gap >= 1, k from 3 to the budget depth of each slope";
  }
  return r;
}

ExponentReproduction reproduce_exponents(const SlopePair& pair, const AcceptanceConfig& cfg) {
  ExponentReproduction out;
  out.pair = pair;
  const SlopeSequence seq = SlopeSequence::parse(pair.slope);
  const Alphabet alphabet(pair.a, pair.b);
  const TheoreticalExponents th = theoretical_exponents(sigma_exact(seq));
  const std::vector<double> targets = {th.w2star->to_double(), th.hat_w2.to_double(), th.lambda2.to_double(),
                                       th.hat_lambda2.to_double()};
  const std::size_t need_k = 3;
  const std::size_t need_l = std::max<std::size_t>(3, *seq.bound() + 1);

  WordMatrices wm(alphabet, seq, cfg.digit_budget);
  int first = 3;
  while (log10_bound(wm.X(first)).lo < cfg.log10_gate) {
    if (++first > cfg.max_depth) throw ResourceError("reproduce_exponents: gate not reached within max depth");
  }
  for (int depth = std::max(first + static_cast<int>(need_k) - 1, 5); depth <= cfg.max_depth; ++depth) {
    const std::uint64_t lmax = ell_of(seq, depth + 1);
    std::vector<EstimateTable> tables;
    tables.push_back(estimate_w2star(wm, depth));
    tables.push_back(estimate_hat_w2(wm, depth));
    tables.push_back(estimate_lambda2(wm, lmax));
    tables.push_back(estimate_hat_lambda2(wm, lmax));
    for (std::size_t i = 0; i < 4; ++i) tables[i].target = targets[i];
    if (tables[0].rows_above(cfg.log10_gate) < need_k || tables[2].rows_above(cfg.log10_gate) < need_l ||
        tables[3].rows_above(cfg.log10_gate) < need_l) {
      continue;
    }
    out.depth = depth;
    out.lmax = lmax;
    out.passed = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t need = i < 2 ? need_k : need_l;
      const std::size_t gated = tables[i].rows_above(cfg.log10_gate);
      const auto tail = tables[i].gated_tail(cfg.log10_gate, std::max(need, (gated + 2) / 3));
      out.limits.push_back(tail);
      const double miss = tail ? relative_miss(tail->value, targets[i]) : std::numeric_limits<double>::infinity();
      out.misses.push_back(miss);
      out.passed = out.passed && miss <= cfg.tolerance;
    }
    out.tables = std::move(tables);
    return out;
  }
  throw ResourceError("reproduce_exponents: not enough gated rows within max depth");
}

CriterionResult criterion_exponents(const AcceptanceConfig& cfg) {
  CriterionResult r{3, "exponent limits", true, {}, Json::array()};
  double worst = 0.0;
  for (const auto& p : cfg.exponent_pairs) {
    Json d = pair_json(p);
    try {
      const ExponentReproduction rep = reproduce_exponents(p, cfg);
      d["depth"] = rep.depth;
      d["lmax"] = rep.lmax;
      Json q = Json::array();
      for (std::size_t i = 0; i < rep.tables.size(); ++i) {
        const auto& t = rep.tables[i];
        Json e;
        e["quantity"] = t.quantity;
        e["limit"] = t.kind == LimitKind::Limsup ? "limsup" : "liminf";
        e["target"] = t.target;
        if (rep.limits[i]) {
          e["tail"] = bracket_json(rep.limits[i]->value);
          e["tail_indices"] = Json::array({rep.limits[i]->first_index, rep.limits[i]->last_index});
        }
        e["relative_miss"] = rep.misses[i];
        q.push_back(e);
        worst = std::max(worst, rep.misses[i]);
      }
      d["quantities"] = q;
      d["passed"] = rep.passed;
      if (!rep.passed) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + pair_name(p) + " misses a target";
      }
    } catch (const ResourceError& e) {
      r.passed = false;
      d["error"] = e.what();
      r.detail += (r.detail.empty() ? "" : "; ") + pair_name(p) + ": " + e.what();
    }
    r.data.push_back(d);
  }
  if (r.passed) {
    r.detail = std::to_string(cfg.exponent_pairs.size()) + " slopes, 4 limits each, worst relative miss " +
               fmt("%.3g", worst) + " <= " + fmt("%.3g", cfg.tolerance) + " (rows with log10 height >= " +
               fmt("%.0f", cfg.log10_gate) + ")";
  }
  return r;
}

CriterionResult criterion_spectrum(const AcceptanceConfig&) {
  CriterionResult r{4, "spectrum top and limit point", true, {}, Json::object()};
  const std::vector<SpectrumRow> rows = spectrum_table(3);
  const std::vector<QuadReal> hat_w2 = {QuadReal(3, 1, 5, 2), QuadReal(1, 1, 2, 1), QuadReal(4, 1, 10, 3)};
  const std::vector<QuadReal> hat_lambda2 = {QuadReal(-1, 1, 5, 2), QuadReal(2, -1, 2, 1), QuadReal(-2, 1, 10, 2)};
  bool table_ok = true;
  Json table = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    table_ok = table_ok && rows[i].hat_w2 == hat_w2[i] && rows[i].hat_lambda2 == hat_lambda2[i];
    table.push_back({{"n", rows[i].n},
                     {"hat_w2", rows[i].hat_w2.radical()},
                     {"hat_lambda2", rows[i].hat_lambda2.radical()}});
  }
  r.data["table"] = table;
  r.data["table_matches"] = table_ok;

  const RealEnclosure s = s_limit(11);
  const Rational stated(BigInt("38674997056"), BigInt("100000000000"));
  const bool encloses = s.contains(stated);
  r.data["s_limit"] = {{"lo", QuadReal(s.lo).decimal(15)}, {"hi", QuadReal(s.hi).decimal(15)}};
  r.data["stated_value"] = "0.38674997056";
  r.data["encloses_stated_value"] = encloses;

  // Strictly decreasing for n <= 12. Above the limit is checked against a
  // 30-digit enclosure; from n = 6 on the gap is below its resolution, so
  // only "not below" is decidable there.
  const RealEnclosure fine = s_limit(30);
  bool decreasing = true;
  QuadReal prev = sigma_n(0);
  Json sig = Json::array({prev.decimal(15)});
  for (unsigned n = 1; n <= 12; ++n) {
    const QuadReal cur = sigma_n(n);
    const QuadReal bound = n <= 5 ? QuadReal(fine.hi) : QuadReal(fine.lo);
    decreasing = decreasing && compare(cur, prev) < 0 && compare(cur, bound) > 0;
    sig.push_back(cur.decimal(15));
    prev = cur;
  }
  r.data["sigma_n"] = sig;
  r.data["sigma_decreasing_above_limit"] = decreasing;

  r.passed = table_ok && encloses && decreasing;
  std::ostringstream d;
  d << "table " << (table_ok ? "exact" : "MISMATCH") << "; sigma_n decreasing to the limit "
    << (decreasing ? "yes" : "NO") << "; limit enclosure [" << QuadReal(s.lo).decimal(13) << ", "
    << QuadReal(s.hi).decimal(13) << "] " << (encloses ? "contains" : "excludes") << " the stated 0.38674997056";
  r.detail = d.str();
  return r;
}

CriterionResult criterion_audit(const AcceptanceConfig&) {
  CriterionResult r{5, "inequality audit", true, {}, Json::array()};
  std::vector<std::pair<std::string, QuadReal>> grid;
  for (unsigned d = 1; d <= 10; ++d) grid.emplace_back("const:" + std::to_string(d), sigma_exact(SlopeSequence::constant(d)));
  for (const char* p : {"periodic:1,2", "periodic:1,3", "periodic:2,3", "periodic:1,1,2", "periodic:1,2,2"}) {
    grid.emplace_back(p, sigma_exact(SlopeSequence::parse(p)));
  }
  for (unsigned n = 2; n <= 6; ++n) grid.emplace_back("psi^" + std::to_string(n), sigma_n(n));

  std::size_t items = 0;
  for (const auto& [name, sigma] : grid) {
    const std::vector<AuditItem> audit = inequality_audit(theoretical_exponents(sigma));
    Json failed = Json::array();
    for (const auto& a : audit) {
      ++items;
      if (!a.holds) failed.push_back(a.name);
    }
    if (!failed.empty()) r.passed = false;
    r.data.push_back({{"sigma_of", name}, {"sigma", sigma.decimal(12)}, {"failed", failed}});
  }

  const std::vector<AuditItem> fib = inequality_audit(theoretical_exponents(sigma_exact(SlopeSequence::constant(1))));
  const std::vector<std::string> sharp = {"hat_w2 <= (3+sqrt5)/2", "hat_w2star <= (3+sqrt5)/2",
                                          "(1+sqrt5)/2 <= hat_w2'"};
  bool attained = true;
  for (const auto& name : sharp) {
    const auto it = std::find_if(fib.begin(), fib.end(), [&](const AuditItem& a) { return a.name == name; });
    attained = attained && it != fib.end() && it->holds && it->equality;
  }
  r.passed = r.passed && attained;
  r.detail = std::to_string(grid.size()) + " exact sigma values, " + std::to_string(items) + " inequalities " +
             (r.passed ? "all hold" : "NOT all hold") + "; golden-ratio sigma attains the three sharp bounds: " +
             (attained ? "yes" : "no");
  return r;
}

CriterionResult criterion_beta(const AcceptanceConfig& cfg) {
  CriterionResult r{6, "beta-series irrationality exponent", true, {}, Json::array()};
  std::ostringstream detail;
  for (const char* spec : {"const:1", "const:2"}) {
    const SlopeSequence seq = SlopeSequence::parse(spec);
    const BetaEstimate be = estimate_w1_beta(seq, cfg.beta_terms);
    const double miss = relative_miss(be.limit.value, be.table.target);
    const bool ok = miss <= cfg.beta_tolerance;
    r.passed = r.passed && ok;
    r.data.push_back({{"slope", spec},
                      {"terms", cfg.beta_terms},
                      {"certified_quotients", be.certified_quotients.size()},
                      {"tail", bracket_json(be.limit.value)},
                      {"target", be.table.target},
                      {"relative_miss", miss}});
    detail << (detail.tellp() > 0 ? "; " : "") << spec << " tail " << fmt("%.4f", be.limit.value.mid()) << " vs "
           << fmt("%.4f", be.table.target) << " (miss " << fmt("%.3g", miss) << ")";
  }
  r.detail = detail.str() + ", tolerance " + fmt("%.3g", cfg.beta_tolerance);
  return r;
}

CriterionResult criterion_determinism(const AcceptanceConfig&) {
  CriterionResult r{7, "determinism", true, {}, Json::object()};
  RunConfig rc;
  rc.slope = "const:1";
  rc.depth = 14;
  rc.lmax = 25;
  const auto render = [](const Report& rep) { return render_json(rep.json) + render_csv(rep.csv); };
  const std::vector<std::pair<std::string, Report (*)(const RunConfig&)>> builders = {
      {"word", word_report}, {"approx", approx_report}, {"exponents", exponents_report},
      {"spectrum", spectrum_report}};
  for (const auto& [name, build] : builders) {
    const bool same = render(build(rc)) == render(build(rc));
    r.data[name] = same;
    r.passed = r.passed && same;
  }
  r.detail = r.passed ? "word, approx, exponents and spectrum reports byte-identical across two runs"
                      : "reports differ between runs";
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  using Criterion = CriterionResult (*)(const AcceptanceConfig&);
  const std::pair<const char*, Criterion> all[] = {
      {"exact identities", criterion_identities},     {"quadratic approximant heights", criterion_quadratic_heights},
      {"exponent limits", criterion_exponents},       {"spectrum top and limit point", criterion_spectrum},
      {"inequality audit", criterion_audit},          {"beta-series irrationality exponent", criterion_beta},
      {"determinism", criterion_determinism}};
  std::vector<CriterionResult> out;
  for (const auto& [title, run] : all) {
    const int id = static_cast<int>(out.size()) + 1;
    try {
      out.push_back(run(cfg));
    } catch (const std::exception& e) {
      out.push_back({id, title, false, std::string("aborted: ") + e.what(), Json(nullptr)});
    }
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " " + (r.passed ? "PASS" : "FAIL") + " " + r.title + ": " + r.detail;
}

Json acceptance_json(const AcceptanceConfig& cfg, const std::vector<CriterionResult>& results) {
  Json j = envelope("verify");
  Json c;
  c["tolerance"] = cfg.tolerance;
  c["beta_tolerance"] = cfg.beta_tolerance;
  c["log10_gate"] = cfg.log10_gate;
  c["beta_terms"] = cfg.beta_terms;
  c["quasi_pairs"] = cfg.quasi_pairs;
  c["seed"] = cfg.seed;
  Json ip = Json::array(), ep = Json::array();
  for (const auto& p : cfg.identity_pairs) ip.push_back(pair_json(p));
  for (const auto& p : cfg.exponent_pairs) ep.push_back(pair_json(p));
  c["identity_pairs"] = ip;
  c["exponent_pairs"] = ep;
  j["config"] = c;
  Json crit = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}});
  }
  j["passed"] = all;
  j["criteria"] = crit;
  return j;
}

}  // namespace sturmian
