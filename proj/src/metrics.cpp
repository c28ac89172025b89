#include "morpheval/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "morpheval/text.hpp"

namespace morpheval {

namespace {

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::vector<std::string> stripped_texts(const TokenizedWord& w) {
  std::vector<std::string> out;
  out.reserve(w.tokens.size());
  for (const Token& t : w.tokens) out.push_back(t.text);
  return out;
}

std::string join_plus(std::span<const std::string> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back('+');
    out += parts[i];
  }
  return out;
}

struct SeqCounts {
  std::uint64_t char_edit = 0, gold_chars = 0;
  std::uint64_t hits = 0, subs = 0, dels = 0, inss = 0;
  std::uint64_t k = 0;
  std::uint64_t exact = 0, items = 0;
};

SequenceAgreement fold_agreement(const SeqCounts& c) {
  SequenceAgreement a;
  a.cer = ratio(static_cast<double>(c.char_edit), static_cast<double>(c.gold_chars));
  std::uint64_t sdi = c.subs + c.dels + c.inss;
  a.wer = ratio(static_cast<double>(sdi), static_cast<double>(c.k));
  a.mer = ratio(static_cast<double>(sdi), static_cast<double>(sdi + c.hits));
  std::uint64_t n_ref = c.hits + c.subs + c.dels;
  std::uint64_t n_hyp = c.hits + c.subs + c.inss;
  a.wip = ratio(static_cast<double>(c.hits), static_cast<double>(n_ref)) *
          ratio(static_cast<double>(c.hits), static_cast<double>(n_hyp));
  a.wil = 1.0 - a.wip;
  a.exact_match = ratio(static_cast<double>(c.exact), static_cast<double>(c.items));
  return a;
}

template <class Seq>
std::size_t levenshtein(const Seq& a, const Seq& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

BoundarySet pred_boundaries(const TokenizedWord& w) {
  BoundarySet b;
  std::uint32_t offset = 0;
  for (const Token& t : w.tokens) {
    if (t.is_unknown)
      throw std::invalid_argument("pred_boundaries: tokenization contains an unknown token");
    offset += static_cast<std::uint32_t>(text::cp_length(t.text));
    b.offsets.push_back(offset);
  }
  return b;
}

BoundaryCounts boundary_counts(const BoundarySet& gold, const BoundarySet& pred) {
  BoundaryCounts c;
  std::size_t i = 0, j = 0;
  while (i < gold.offsets.size() && j < pred.offsets.size()) {
    if (gold.offsets[i] == pred.offsets[j]) {
      ++c.tp;
      ++i;
      ++j;
    } else if (gold.offsets[i] < pred.offsets[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  c.fn = gold.offsets.size() - c.tp;
  c.fp = pred.offsets.size() - c.tp;
  return c;
}

MicroPRF micro_prf(std::span<const BoundaryCounts> items) {
  MicroPRF m;
  for (const BoundaryCounts& c : items) {
    m.tp += c.tp;
    m.fp += c.fp;
    m.fn += c.fn;
  }
  m.p_degenerate = m.tp + m.fp == 0;
  m.r_degenerate = m.tp + m.fn == 0;
  m.p = m.p_degenerate ? 0.0 : static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
  m.r = m.r_degenerate ? 0.0 : static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  m.f1 = (m.p + m.r) == 0.0 ? 0.0 : 2.0 * m.p * m.r / (m.p + m.r);
  return m;
}

MacroPRF macro_prf(std::span<const BoundaryCounts> items, double eps) {
  MacroPRF m;
  if (items.empty()) return m;
  for (const BoundaryCounts& c : items) {
    double p = static_cast<double>(c.tp) / (static_cast<double>(c.tp + c.fp) + eps);
    double r = static_cast<double>(c.tp) / (static_cast<double>(c.tp + c.fn) + eps);
    double f1 = 2.0 * p * r / (p + r + eps);
    m.p += p;
    m.r += r;
    m.f1 += f1;
  }
  double n = static_cast<double>(items.size());
  m.p /= n;
  m.r /= n;
  m.f1 /= n;
  return m;
}

double fertility(std::span<const TokenizedWord> words) {
  if (words.empty()) throw std::invalid_argument("fertility: empty word stream");
  std::uint64_t tokens = 0;
  // Unknown words contribute a single unmarked token.
  for (const TokenizedWord& w : words) tokens += w.has_unknown() ? 1 : w.size();
  return static_cast<double>(tokens) / static_cast<double>(words.size());
}

double continuation_rate(std::span<const TokenizedWord> words) {
  std::uint64_t tokens = 0, cont = 0;
  for (const TokenizedWord& w : words) {
    if (w.has_unknown()) {
      ++tokens;
      continue;
    }
    tokens += w.size();
    for (const Token& t : w.tokens) cont += t.is_continuation ? 1 : 0;
  }
  if (tokens == 0) throw std::invalid_argument("continuation_rate: no tokens");
  return static_cast<double>(cont) / static_cast<double>(tokens);
}

bool lemma_hit(const GoldSegmentation& gold, const BoundarySet& pred) {
  if (gold.boundaries.offsets.empty()) return false;
  std::uint32_t edge = gold.boundaries.offsets.front();
  return std::binary_search(pred.offsets.begin(), pred.offsets.end(), edge);
}

std::pair<double, double> over_under_seg(
    std::span<const std::pair<std::size_t, std::size_t>> nk, double eps) {
  if (nk.empty()) return {0.0, 0.0};
  double over = 0, under = 0;
  for (const auto& [ni, ki] : nk) {
    over += static_cast<double>(ni) / (static_cast<double>(ki) + eps);
    under += static_cast<double>(ki) / (static_cast<double>(ni) + eps);
  }
  double m = static_cast<double>(nk.size());
  return {over / m, under / m};
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  return levenshtein(a, b);
}

std::size_t edit_distance(std::span<const std::string> a, std::span<const std::string> b) {
  return levenshtein(a, b);
}

Alignment align_tokens(std::span<const std::string> ref, std::span<const std::string> hyp) {
  std::size_t m = ref.size(), n = hyp.size();
  std::vector<std::uint32_t> d((m + 1) * (n + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return d[i * (n + 1) + j]; };
  for (std::size_t i = 0; i <= m; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= n; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      std::uint32_t sub = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  Alignment al;
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) && ref[i - 1] == hyp[j - 1]) {
      ++al.hits;
      --i;
      --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      ++al.subs;
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ++al.dels;
      --i;
    } else {
      ++al.inss;
      --j;
    }
  }
  return al;
}

SequenceAgreement sequence_agreement(
    std::span<const std::pair<std::vector<std::string>, std::vector<std::string>>> items) {
  SeqCounts c;
  for (const auto& [gold, pred] : items) {
    std::u32string g32 = text::decode_utf8(join_plus(gold));
    std::u32string p32 = text::decode_utf8(join_plus(pred));
    c.char_edit += edit_distance(g32, p32);
    c.gold_chars += g32.size();
    Alignment al = align_tokens(gold, pred);
    c.hits += al.hits;
    c.subs += al.subs;
    c.dels += al.dels;
    c.inss += al.inss;
    c.k += gold.size();
    std::uint64_t edits = al.subs + al.dels + al.inss;
    c.exact += edits == 0 ? 1 : 0;
    ++c.items;
  }
  return fold_agreement(c);
}

std::vector<std::string> top_affixes(std::span<const MorphAnalysis> analyses, std::size_t top) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const MorphAnalysis& a : analyses)
    for (const std::string& s : a.suffixes) ++counts[s];
  std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  std::vector<std::string> out;
  out.reserve(std::min(top, ranked.size()));
  for (std::size_t i = 0; i < ranked.size() && i < top; ++i) out.push_back(ranked[i].first);
  return out;
}

AffixSummary affix_metrics(std::span<const MorphAnalysis> analyses,
                           std::span<const TokenizedWord> preds,
                           const std::vector<std::string>& affixes) {
  if (analyses.size() != preds.size())
    throw std::invalid_argument("affix_metrics: analyses/preds size mismatch");
  std::unordered_set<std::string, StringHash, std::equal_to<>> wanted(affixes.begin(),
                                                                      affixes.end());

  std::unordered_set<std::string, StringHash, std::equal_to<>> piece_types;
  for (const TokenizedWord& w : preds)
    for (const Token& t : w.tokens)
      if (!t.is_unknown) piece_types.insert(t.text);

  std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> occ;  // total, atomic
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    GoldSegmentation g = gold_segmentation(analyses[i]);
    if (!g.concatenative || preds[i].has_unknown()) continue;
    BoundarySet pred = pred_boundaries(preds[i]);
    for (std::size_t j = 1; j < g.k; ++j) {
      const std::string& type = g.morphs[j];
      if (wanted.find(type) == wanted.end()) continue;
      std::uint32_t start = g.boundaries.offsets[j - 1];
      std::uint32_t end = g.boundaries.offsets[j];
      auto lo = std::lower_bound(pred.offsets.begin(), pred.offsets.end(), start);
      bool start_ok = lo != pred.offsets.end() && *lo == start;
      auto hi = std::lower_bound(pred.offsets.begin(), pred.offsets.end(), end);
      bool end_ok = hi != pred.offsets.end() && *hi == end;
      bool interior_clear = start_ok && end_ok && (lo + 1 == hi);
      auto& [total, atomic] = occ[type];
      ++total;
      atomic += interior_clear ? 1 : 0;
    }
  }

  AffixSummary s;
  for (const std::string& a : affixes) {
    auto it = occ.find(a);
    if (it == occ.end()) {
      ++s.types_excluded;
      continue;
    }
    ++s.types_considered;
    s.occurrences += it->second.first;
    s.atomic_occurrences += it->second.second;
    if (piece_types.find(a) == piece_types.end()) s.uncovered.push_back(a);
  }
  std::sort(s.uncovered.begin(), s.uncovered.end());
  s.coverage = s.types_considered == 0
                   ? 0.0
                   : static_cast<double>(s.types_considered - s.uncovered.size()) /
                         static_cast<double>(s.types_considered);
  s.atomicity = s.occurrences == 0 ? 0.0
                                   : static_cast<double>(s.atomic_occurrences) /
                                         static_cast<double>(s.occurrences);
  return s;
}

Evaluation evaluate(std::span<const MorphAnalysis> analyses, const Tokenizer& tok,
                    const EvalOptions& opt) {
  Evaluation ev;
  std::size_t n = analyses.size();
  ev.report.total_items = n;
  if (n == 0) return ev;

  struct PerItem {
    TokenizedWord pred;
    TokenizedWord lemma_pred;
    GoldSegmentation gold;
    bool long_word = false;
    ItemDiagnostics diag;
    bool evaluated = false;
  };
  std::vector<PerItem> per(n);

  for_each_index(n, opt.exec, [&](std::size_t i) {
    PerItem& it = per[i];
    const MorphAnalysis& a = analyses[i];
    it.gold = gold_segmentation(a);
    it.pred = tok(a.word);
    it.lemma_pred = tok(a.lemma);
    it.long_word = text::cp_length(a.word) > kMaxWordCodePoints;
    if (!it.gold.concatenative || it.pred.has_unknown()) return;

    ItemDiagnostics& d = it.diag;
    d.n = static_cast<std::uint32_t>(it.pred.size());
    d.k = static_cast<std::uint32_t>(it.gold.k);
    BoundarySet pb = pred_boundaries(it.pred);
    BoundaryCounts bc = boundary_counts(it.gold.boundaries, pb);
    d.tp = static_cast<std::uint32_t>(bc.tp);
    d.fp = static_cast<std::uint32_t>(bc.fp);
    d.fn = static_cast<std::uint32_t>(bc.fn);
    d.p = static_cast<double>(d.tp) / (static_cast<double>(d.tp + d.fp) + opt.eps);
    d.r = static_cast<double>(d.tp) / (static_cast<double>(d.tp + d.fn) + opt.eps);
    d.f1 = 2.0 * d.p * d.r / (d.p + d.r + opt.eps);
    d.lemma_hit = lemma_hit(it.gold, pb);

    std::vector<std::string> pred_texts = stripped_texts(it.pred);
    std::u32string g32 = text::decode_utf8(join_plus(it.gold.morphs));
    std::u32string p32 = text::decode_utf8(join_plus(pred_texts));
    d.char_edit = static_cast<std::uint32_t>(edit_distance(g32, p32));
    d.gold_chars = static_cast<std::uint32_t>(g32.size());
    Alignment al = align_tokens(it.gold.morphs, pred_texts);
    d.hits = static_cast<std::uint32_t>(al.hits);
    d.subs = static_cast<std::uint32_t>(al.subs);
    d.dels = static_cast<std::uint32_t>(al.dels);
    d.inss = static_cast<std::uint32_t>(al.inss);
    d.exact = al.subs + al.dels + al.inss == 0;
    it.evaluated = true;
  });

  MetricsReport& rep = ev.report;
  ev.shapes.resize(n);
  std::uint64_t all_tokens = 0, all_cont = 0;
  std::size_t lemma_single = 0, lemma_unknown = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const PerItem& it = per[i];
    WordShape& ws = ev.shapes[i];
    if (it.pred.has_unknown()) {
      // Unknown words count as one unmarked token, whatever surrounds them.
      ws.n = 1;
    } else {
      ws.n = static_cast<std::uint32_t>(it.pred.size());
      for (const Token& t : it.pred.tokens) ws.continuations += t.is_continuation ? 1 : 0;
    }
    ws.lemma_single = it.lemma_pred.size() == 1;
    ws.lemma_unknown = it.lemma_pred.has_unknown();
    all_tokens += ws.n;
    all_cont += ws.continuations;
    lemma_single += ws.lemma_single ? 1 : 0;
    lemma_unknown += ws.lemma_unknown ? 1 : 0;
    if (!it.gold.concatenative) ++rep.skipped_nonconcatenative;
    if (it.pred.has_unknown()) ++rep.unk_words;
    if (it.long_word) ++rep.long_words;
    if (it.evaluated) ev.items.push_back(it.diag);
  }
  rep.evaluated_items = ev.items.size();
  rep.unk_word_rate = static_cast<double>(rep.unk_words) / static_cast<double>(n);
  rep.fertility = static_cast<double>(all_tokens) / static_cast<double>(n);
  rep.continuation_rate =
      all_tokens == 0 ? 0.0 : static_cast<double>(all_cont) / static_cast<double>(all_tokens);
  rep.lemma_single_rate = static_cast<double>(lemma_single) / static_cast<double>(n);
  rep.lemma_unknown_rate = static_cast<double>(lemma_unknown) / static_cast<double>(n);

  std::span<const ItemDiagnostics> items(ev.items);
  auto fold_items = [eps = opt.eps](std::span<const ItemDiagnostics> v) {
    struct Folded {
      MicroPRF micro;
      MacroPRF macro;
      double sw = 0, lemma = 0, exact = 0, over = 0, under = 0;
      SequenceAgreement agr;
    } f;
    if (v.empty()) return f;
    std::uint64_t tp = 0, fp = 0, fn = 0, ntok = 0;
    SeqCounts sc;
    double psum = 0, rsum = 0, fsum = 0, over = 0, under = 0;
    std::uint64_t lemma = 0, exact = 0;
    for (const ItemDiagnostics& d : v) {
      tp += d.tp;
      fp += d.fp;
      fn += d.fn;
      psum += d.p;
      rsum += d.r;
      fsum += d.f1;
      lemma += d.lemma_hit ? 1 : 0;
      exact += d.exact ? 1 : 0;
      ntok += d.n;
      over += static_cast<double>(d.n) / (static_cast<double>(d.k) + eps);
      under += static_cast<double>(d.k) / (static_cast<double>(d.n) + eps);
      sc.char_edit += d.char_edit;
      sc.gold_chars += d.gold_chars;
      sc.hits += d.hits;
      sc.subs += d.subs;
      sc.dels += d.dels;
      sc.inss += d.inss;
      sc.k += d.k;
      sc.exact += d.exact ? 1 : 0;
      ++sc.items;
    }
    double m = static_cast<double>(v.size());
    f.micro.tp = tp;
    f.micro.fp = fp;
    f.micro.fn = fn;
    f.micro.p_degenerate = tp + fp == 0;
    f.micro.r_degenerate = tp + fn == 0;
    f.micro.p = f.micro.p_degenerate ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    f.micro.r = f.micro.r_degenerate ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    f.micro.f1 =
        (f.micro.p + f.micro.r) == 0.0 ? 0.0 : 2.0 * f.micro.p * f.micro.r / (f.micro.p + f.micro.r);
    f.macro.p = psum / m;
    f.macro.r = rsum / m;
    f.macro.f1 = fsum / m;
    f.sw = static_cast<double>(ntok) / m;
    f.lemma = static_cast<double>(lemma) / m;
    f.exact = static_cast<double>(exact) / m;
    f.over = over / m;
    f.under = under / m;
    f.agr = fold_agreement(sc);
    return f;
  };

  auto folded = fold_items(items);
  rep.micro = folded.micro;
  rep.macro = folded.macro;
  rep.subwords_per_word = folded.sw;
  rep.lemma_hit_rate = folded.lemma;
  rep.overseg = folded.over;
  rep.underseg = folded.under;
  rep.agreement = folded.agr;

  std::vector<std::string> affixes =
      opt.affixes.empty() ? top_affixes(analyses, opt.affix_top) : opt.affixes;
  if (!affixes.empty()) {
    std::vector<TokenizedWord> preds;
    preds.reserve(n);
    for (const PerItem& it : per) preds.push_back(it.pred);
    rep.affix = affix_metrics(analyses, preds, affixes);
  }

  if (opt.bootstrap_resamples > 0) {
    std::size_t R = opt.bootstrap_resamples;
    auto ci_items = [&](const char* name, auto stat) {
      rep.intervals[name] =
          bootstrap_ci(items, stat, R, opt.seed, opt.exec);
    };
    ci_items("f1_micro", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).micro.f1; });
    ci_items("p_micro", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).micro.p; });
    ci_items("r_micro", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).micro.r; });
    ci_items("f1_macro", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).macro.f1; });
    ci_items("lemma_boundary",
             [&](std::span<const ItemDiagnostics> v) { return fold_items(v).lemma; });
    ci_items("exact_match", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).exact; });
    ci_items("sw_per_word",
             [&](std::span<const ItemDiagnostics> v) { return fold_items(v).sw; });
    ci_items("overseg", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).over; });
    ci_items("underseg", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).under; });
    ci_items("cer", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).agr.cer; });
    ci_items("wer", [&](std::span<const ItemDiagnostics> v) { return fold_items(v).agr.wer; });

    std::span<const WordShape> shapes(ev.shapes);
    rep.intervals["fertility"] = bootstrap_ci(
        shapes,
        [](std::span<const WordShape> v) {
          std::uint64_t t = 0;
          for (const WordShape& w : v) t += w.n;
          return static_cast<double>(t) / static_cast<double>(v.size());
        },
        R, opt.seed, opt.exec);
    rep.intervals["continuation_rate"] = bootstrap_ci(
        shapes,
        [](std::span<const WordShape> v) {
          std::uint64_t t = 0, c = 0;
          for (const WordShape& w : v) {
            t += w.n;
            c += w.continuations;
          }
          return t == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(t);
        },
        R, opt.seed, opt.exec);
    rep.intervals["lemma_single"] = bootstrap_ci(
        shapes,
        [](std::span<const WordShape> v) {
          std::uint64_t s = 0;
          for (const WordShape& w : v) s += w.lemma_single ? 1 : 0;
          return static_cast<double>(s) / static_cast<double>(v.size());
        },
        R, opt.seed, opt.exec);
  }

  return ev;
}

}  // namespace morpheval
