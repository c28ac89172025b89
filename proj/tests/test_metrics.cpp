#include <doctest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "morpheval/metrics.hpp"
#include "morpheval/text.hpp"
#include "temp_files.hpp"

using namespace morpheval;

namespace {

TokenizedWord pieces(const std::string& word, std::vector<std::string> texts) {
  TokenizedWord w;
  w.word = word;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Token t;
    t.text = std::move(texts[i]);
    t.is_continuation = i > 0;
    w.tokens.push_back(std::move(t));
  }
  return w;
}

constexpr double kTol = 1e-6;

}  // namespace

TEST_CASE("predicted boundaries are cumulative stripped lengths") {
  using O = std::vector<std::uint32_t>;
  CHECK(pred_boundaries(pieces("kitaplarımızda", {"kitap", "lar", "ımız", "da"})).offsets ==
        O{5, 8, 12, 14});
  CHECK(pred_boundaries(pieces("kitaplarımızda", {"ki", "tap", "lar", "ımız", "da"})).offsets ==
        O{2, 5, 8, 12, 14});
  CHECK(pred_boundaries(pieces("koşuyordum", {"koş", "uyor", "dum"})).offsets == O{3, 7, 10});

  TokenizedWord unk;
  unk.word = "x";
  Token t;
  t.text = "[UNK]";
  t.is_unknown = true;
  unk.tokens.push_back(t);
  CHECK_THROWS_AS(pred_boundaries(unk), std::invalid_argument);
}

TEST_CASE("boundary counting") {
  BoundarySet gold{{5, 8, 12, 14}};
  BoundaryCounts exact = boundary_counts(gold, BoundarySet{{5, 8, 12, 14}});
  CHECK(exact.tp == 4);
  CHECK(exact.fp == 0);
  CHECK(exact.fn == 0);

  BoundaryCounts extra = boundary_counts(gold, BoundarySet{{2, 5, 8, 12, 14}});
  CHECK(extra.tp == 4);
  CHECK(extra.fp == 1);
  CHECK(extra.fn == 0);

  BoundaryCounts missing = boundary_counts(BoundarySet{{3, 7, 9, 10}}, BoundarySet{{3, 7, 10}});
  CHECK(missing.tp == 3);
  CHECK(missing.fp == 0);
  CHECK(missing.fn == 1);

  BoundaryCounts disjoint = boundary_counts(BoundarySet{{1, 3}}, BoundarySet{{2, 4}});
  CHECK(disjoint.tp == 0);
  CHECK(disjoint.fp == 2);
  CHECK(disjoint.fn == 2);
}

TEST_CASE("micro scores match the worked boundary cases") {
  MicroPRF a = micro_prf(std::vector<BoundaryCounts>{{4, 0, 0}});
  CHECK(a.p == doctest::Approx(1.0));
  CHECK(a.r == doctest::Approx(1.0));
  CHECK(a.f1 == doctest::Approx(1.0));

  MicroPRF b = micro_prf(std::vector<BoundaryCounts>{{4, 1, 0}});
  CHECK(b.p == doctest::Approx(0.8));
  CHECK(b.r == doctest::Approx(1.0));
  CHECK(b.f1 == doctest::Approx(8.0 / 9.0).epsilon(1e-9));

  MicroPRF c = micro_prf(std::vector<BoundaryCounts>{{3, 0, 1}});
  CHECK(c.p == doctest::Approx(1.0));
  CHECK(c.r == doctest::Approx(0.75));
  CHECK(c.f1 == doctest::Approx(6.0 / 7.0).epsilon(1e-9));
  // Harmonic mean identity.
  CHECK(c.f1 == doctest::Approx(2.0 * c.p * c.r / (c.p + c.r)));

  MicroPRF empty = micro_prf(std::vector<BoundaryCounts>{{0, 0, 0}});
  CHECK(empty.p_degenerate);
  CHECK(empty.r_degenerate);
  CHECK(empty.p == 0.0);
  CHECK(empty.f1 == 0.0);
}

TEST_CASE("macro scores are eps-guarded per-item means") {
  MacroPRF two = macro_prf(std::vector<BoundaryCounts>{{4, 0, 0}, {4, 1, 0}});
  CHECK(two.f1 == doctest::Approx(17.0 / 18.0).epsilon(kTol));
  CHECK(two.p == doctest::Approx(0.9).epsilon(kTol));
  CHECK(two.r == doctest::Approx(1.0).epsilon(kTol));

  // Single-morpheme item: one gold boundary, matched.
  MacroPRF single = macro_prf(std::vector<BoundaryCounts>{{1, 0, 0}});
  CHECK(single.f1 == doctest::Approx(1.0).epsilon(kTol));
}

TEST_CASE("fertility and continuation rate on the six-word sentence") {
  std::vector<TokenizedWord> sentence{
      pieces("evlerimizden", {"ev", "ler", "imiz", "den"}),
      pieces("ayrıldık", {"ayrıl", "dık"}),
      pieces("ve", {"ve"}),
      pieces("ankara'ya", {"ankara", "'", "ya"}),
      pieces("döndük", {"dön", "dük"}),
      pieces(".", {"."}),
  };
  // The apostrophe pieces are unmarked: only the five suffix pieces continue.
  sentence[3].tokens[1].is_continuation = false;
  sentence[3].tokens[2].is_continuation = false;
  CHECK(fertility(sentence) == doctest::Approx(13.0 / 6.0).epsilon(1e-9));
  CHECK(continuation_rate(sentence) == doctest::Approx(5.0 / 13.0).epsilon(1e-9));

  CHECK(fertility(std::vector<TokenizedWord>{pieces("gittim", {"g", "i", "t", "t", "i", "m"})}) ==
        doctest::Approx(6.0));
  CHECK(continuation_rate(std::vector<TokenizedWord>{pieces("ab", {"a", "b"})}) ==
        doctest::Approx(0.5));

  std::vector<TokenizedWord> singles{pieces("ev", {"ev"}), pieces("su", {"su"})};
  CHECK(fertility(singles) == doctest::Approx(1.0));
  CHECK(continuation_rate(singles) == doctest::Approx(0.0));

  CHECK_THROWS_AS(fertility({}), std::invalid_argument);
  CHECK_THROWS_AS(continuation_rate({}), std::invalid_argument);
}

TEST_CASE("unknown words count as one unmarked token") {
  TokenizedWord unk;
  unk.word = "x";
  Token t;
  t.text = "[UNK]";
  t.is_unknown = true;
  unk.tokens.push_back(t);
  unk.tokens.push_back(t);  // even multi-token unknowns collapse

  std::vector<TokenizedWord> words{pieces("evde", {"ev", "de"}), unk};
  CHECK(fertility(words) == doctest::Approx(1.5));
  CHECK(continuation_rate(words) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("lemma boundary hit") {
  GoldSegmentation g = gold_segmentation({"koşuyordum", "koş", {"uyor", "du", "m"}});
  CHECK(lemma_hit(g, pred_boundaries(pieces("koşuyordum", {"koş", "uyor", "dum"}))));
  CHECK(!lemma_hit(g, pred_boundaries(pieces("koşuyordum", {"ko", "şuyor", "dum"}))));

  // Boundary at the lemma edge counts even when the lemma is split inside.
  GoldSegmentation gz = gold_segmentation({"güzelleştirmek", "güzel", {"leş", "tir", "mek"}});
  CHECK(lemma_hit(gz, pred_boundaries(pieces("güzelleştirmek",
                                             {"gü", "zel", "leş", "tir", "mek"}))));
}

TEST_CASE("over and under segmentation are means of per-item ratios") {
  using NK = std::vector<std::pair<std::size_t, std::size_t>>;
  auto [over1, under1] = over_under_seg(NK{{5, 4}});
  CHECK(over1 == doctest::Approx(1.25).epsilon(kTol));
  CHECK(under1 == doctest::Approx(0.8).epsilon(kTol));

  auto [over2, under2] = over_under_seg(NK{{1, 4}});
  CHECK(under2 == doctest::Approx(4.0).epsilon(kTol));
  CHECK(over2 == doctest::Approx(0.25).epsilon(kTol));

  auto [over3, under3] = over_under_seg(NK{{3, 3}, {7, 7}, {1, 1}});
  CHECK(over3 == doctest::Approx(1.0).epsilon(kTol));
  CHECK(under3 == doctest::Approx(1.0).epsilon(kTol));

  // Mean of ratios, not ratio of sums: {2/1, 1/2} averages to 1.25.
  auto [over4, under4] = over_under_seg(NK{{2, 1}, {1, 2}});
  CHECK(over4 == doctest::Approx(1.25).epsilon(kTol));
  CHECK(under4 == doctest::Approx(1.25).epsilon(kTol));
}

TEST_CASE("segmentation reciprocity bounds") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> dist(1, 20);
  std::vector<std::pair<std::size_t, std::size_t>> nk;
  for (int i = 0; i < 200; ++i) {
    auto n = dist(rng);
    auto k = dist(rng);
    nk.push_back({n, k});
    double p = (static_cast<double>(n) / (static_cast<double>(k) + kEps)) *
               (static_cast<double>(k) / (static_cast<double>(n) + kEps));
    CHECK(p <= 1.0);
    CHECK(p >= 1.0 - 1e-6);
  }
  auto [over, under] = over_under_seg(nk);
  CHECK(over * under >= 1.0 - 1e-6);
}

TEST_CASE("edit distance") {
  CHECK(edit_distance(std::u32string_view(U"abc"), std::u32string_view(U"abc")) == 0);
  std::u32string g = text::decode_utf8("koş+uyor+du+m");
  std::u32string p = text::decode_utf8("koş+uyor+dum");
  CHECK(g.size() == 13);
  CHECK(edit_distance(g, p) == 1);

  std::vector<std::string> gt{"koş", "uyor", "du", "m"};
  std::vector<std::string> pt{"koş", "uyor", "dum"};
  CHECK(edit_distance(std::span<const std::string>(gt), std::span<const std::string>(pt)) == 2);
  CHECK(edit_distance(std::span<const std::string>(gt), std::span<const std::string>(gt)) == 0);
}

TEST_CASE("token alignment prefers substitution over deletion over insertion") {
  std::vector<std::string> gt{"koş", "uyor", "du", "m"};
  std::vector<std::string> pt{"koş", "uyor", "dum"};
  Alignment al = align_tokens(gt, pt);
  CHECK(al.hits == 2);
  CHECK(al.subs == 1);
  CHECK(al.dels == 1);
  CHECK(al.inss == 0);

  std::vector<std::string> ab{"a", "b"};
  std::vector<std::string> a{"a"};
  Alignment del = align_tokens(ab, a);
  CHECK(del.hits == 1);
  CHECK(del.dels == 1);
  Alignment ins = align_tokens(a, ab);
  CHECK(ins.hits == 1);
  CHECK(ins.inss == 1);
}

TEST_CASE("sequence agreement") {
  using Item = std::pair<std::vector<std::string>, std::vector<std::string>>;

  std::vector<Item> same{{{"kitap", "lar"}, {"kitap", "lar"}},
                         {{"ev"}, {"ev"}}};
  SequenceAgreement s = sequence_agreement(same);
  CHECK(s.cer == doctest::Approx(0.0));
  CHECK(s.wer == doctest::Approx(0.0));
  CHECK(s.mer == doctest::Approx(0.0));
  CHECK(s.wip == doctest::Approx(1.0));
  CHECK(s.wil == doctest::Approx(0.0));
  CHECK(s.exact_match == doctest::Approx(1.0));

  std::vector<Item> kos{{{"koş", "uyor", "du", "m"}, {"koş", "uyor", "dum"}}};
  SequenceAgreement k = sequence_agreement(kos);
  CHECK(k.cer == doctest::Approx(1.0 / 13.0).epsilon(1e-9));
  CHECK(k.wer == doctest::Approx(0.5));
  CHECK(k.mer == doctest::Approx(0.5));
  CHECK(k.wip == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(k.wil == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(k.exact_match == doctest::Approx(0.0));

  std::vector<Item> drop{{{"a", "b"}, {"a"}}};
  SequenceAgreement d = sequence_agreement(drop);
  CHECK(d.wer == doctest::Approx(0.5));
  CHECK(d.mer == doctest::Approx(0.5));
  CHECK(d.wip == doctest::Approx(0.5));
  CHECK(d.wil == doctest::Approx(0.5));
}

TEST_CASE("affix ranking by frequency then name") {
  std::vector<MorphAnalysis> analyses{
      {"kitaplar", "kitap", {"lar"}},
      {"yollar", "yol", {"lar"}},
      {"evde", "ev", {"de"}},
      {"suda", "su", {"da"}},
  };
  auto top = top_affixes(analyses, 10);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == "lar");
  CHECK(top[1] == "da");  // da/de tie at 1, alphabetical
  CHECK(top[2] == "de");
  CHECK(top_affixes(analyses, 1) == std::vector<std::string>{"lar"});
}

TEST_CASE("affix coverage and atomicity") {
  std::vector<MorphAnalysis> analyses{
      {"kitaplar", "kitap", {"lar"}},
      {"anlar", "an", {"lar"}},
      {"yollar", "yol", {"lar"}},
  };
  std::vector<TokenizedWord> preds{
      pieces("kitaplar", {"kitap", "lar"}),
      pieces("anlar", {"anlar"}),  // affix fused into one piece
      pieces("yollar", {"yol", "lar"}),
  };
  AffixSummary s = affix_metrics(analyses, preds, {"lar"});
  CHECK(s.types_considered == 1);
  CHECK(s.occurrences == 3);
  CHECK(s.atomic_occurrences == 2);
  CHECK(s.atomicity == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(s.coverage == doctest::Approx(1.0));

  // Unseen affix types are excluded, not scored as zero.
  AffixSummary ex = affix_metrics(analyses, preds, {"lar", "xyz"});
  CHECK(ex.types_considered == 1);
  CHECK(ex.types_excluded == 1);
  CHECK(ex.atomicity == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("affixes need a boundary-free interior to count as atomic") {
  std::vector<MorphAnalysis> analyses{{"kitaplar", "kitap", {"lar"}}};
  std::vector<TokenizedWord> chars{char_tokenize("kitaplar")};
  // Every position is a boundary, so both edges match but the affix is
  // carved into pieces; single characters can never cover "lar".
  AffixSummary s = affix_metrics(analyses, chars, {"lar"});
  CHECK(s.occurrences == 1);
  CHECK(s.atomic_occurrences == 0);
  CHECK(s.atomicity == doctest::Approx(0.0));
  CHECK(s.coverage == doctest::Approx(0.0));
}

TEST_CASE("perfect predictions give perfect affix scores") {
  std::vector<MorphAnalysis> analyses{
      {"kitaplar", "kitap", {"lar"}},
      {"evde", "ev", {"de"}},
  };
  std::vector<TokenizedWord> preds{
      pieces("kitaplar", {"kitap", "lar"}),
      pieces("evde", {"ev", "de"}),
  };
  AffixSummary s = affix_metrics(analyses, preds, {"lar", "de"});
  CHECK(s.coverage == doctest::Approx(1.0));
  CHECK(s.atomicity == doctest::Approx(1.0));
}

TEST_CASE("evaluation pools and accounting") {
  auto pretok = write_temp("metrics_pretok.jsonl",
                           R"({"word":"kitaplarımızda","tokens":["kitap","##lar","##ımız","##da"]})"
                           "\n"
                           R"({"word":"vakti","tokens":["vakti"]})"
                           "\n"
                           R"({"word":"kitap","tokens":["kitap"]})"
                           "\n");
  Tokenizer tok = Tokenizer::pretokenized(load_pretokenized(pretok));
  std::vector<MorphAnalysis> analyses{
      {"kitaplarımızda", "kitap", {"lar", "ımız", "da"}},
      {"vakti", "vakit", {"i"}},  // non-concatenative
      {"yok", "yok", {}},         // absent from the tokenization map
  };
  EvalOptions opt;
  opt.exec = Execution::Serial;
  Evaluation ev = evaluate(analyses, tok, opt);
  const MetricsReport& r = ev.report;

  CHECK(r.total_items == 3);
  CHECK(r.evaluated_items == 1);
  CHECK(r.skipped_nonconcatenative == 1);
  CHECK(r.unk_words == 1);
  CHECK(r.unk_word_rate == doctest::Approx(1.0 / 3.0));

  CHECK(r.fertility == doctest::Approx(2.0));  // (4 + 1 + 1) / 3
  CHECK(r.continuation_rate == doctest::Approx(0.5));  // 3 of 6 tokens
  CHECK(r.subwords_per_word == doctest::Approx(4.0));  // evaluated pool only

  CHECK(r.micro.p == doctest::Approx(1.0));
  CHECK(r.micro.r == doctest::Approx(1.0));
  CHECK(r.macro.f1 == doctest::Approx(1.0).epsilon(kTol));
  CHECK(r.lemma_hit_rate == doctest::Approx(1.0));
  CHECK(r.agreement.exact_match == doctest::Approx(1.0));
  CHECK(r.agreement.cer == doctest::Approx(0.0));

  // Lemma pool spans all items; unknown lemmas count single but are tallied.
  CHECK(r.lemma_single_rate == doctest::Approx(1.0));
  CHECK(r.lemma_unknown_rate == doctest::Approx(2.0 / 3.0));

  // Affix pool: "i" only occurs in the skipped item, so it is excluded.
  CHECK(r.affix.types_considered == 3);
  CHECK(r.affix.types_excluded == 1);
  CHECK(r.affix.coverage == doctest::Approx(1.0));
  CHECK(r.affix.atomicity == doctest::Approx(1.0));

  REQUIRE(ev.items.size() == 1);
  CHECK(ev.items[0].exact);
  REQUIRE(ev.shapes.size() == 3);
  CHECK(ev.shapes[2].n == 1);
  CHECK(ev.shapes[2].lemma_unknown);
}

TEST_CASE("char tokenization gives full recall and lemma hits") {
  std::vector<MorphAnalysis> analyses{
      {"kitaplarımızda", "kitap", {"lar", "ımız", "da"}},
      {"güzelleştirmek", "güzel", {"leş", "tir", "mek"}},
      {"koşuyordum", "koş", {"uyor", "du", "m"}},
      {"çocuk", "çocuk", {}},
  };
  EvalOptions opt;
  opt.exec = Execution::Serial;
  Evaluation ev = evaluate(analyses, Tokenizer::chars(), opt);
  CHECK(ev.report.micro.r == doctest::Approx(1.0));
  CHECK(ev.report.lemma_hit_rate == doctest::Approx(1.0));
  CHECK(ev.report.overseg >= 1.0);
}

TEST_CASE("word tokenization is one token per word") {
  Vocabulary v({"[UNK]", "kitaplarımızda", "koşuyordum"}, {"[UNK]"});
  std::vector<MorphAnalysis> analyses{
      {"kitaplarımızda", "kitap", {"lar", "ımız", "da"}},
      {"koşuyordum", "koş", {"uyor", "du", "m"}},
  };
  EvalOptions opt;
  opt.exec = Execution::Serial;
  Evaluation ev = evaluate(analyses, Tokenizer::words(v), opt);
  CHECK(ev.report.fertility == doctest::Approx(1.0));
  CHECK(ev.report.continuation_rate == doctest::Approx(0.0));
  CHECK(ev.report.underseg > 1.0);
  // The only boundary is the word end, which always matches gold's last.
  CHECK(ev.report.micro.p == doctest::Approx(1.0));
}

TEST_CASE("adding boundaries never lowers recall") {
  BoundarySet gold{{5, 8, 12, 14}};
  std::vector<std::uint32_t> base{5, 14};
  double prev_r = -1.0;
  for (std::uint32_t extra : {2u, 8u, 9u, 12u}) {
    base.push_back(extra);
    std::sort(base.begin(), base.end());
    MicroPRF m = micro_prf(std::vector<BoundaryCounts>{boundary_counts(gold, BoundarySet{base})});
    CHECK(m.r >= prev_r);
    prev_r = m.r;
  }
}

TEST_CASE("bootstrap intervals appear when requested") {
  std::vector<MorphAnalysis> analyses{
      {"kitaplar", "kitap", {"lar"}},
      {"evde", "ev", {"de"}},
      {"yollar", "yol", {"lar"}},
  };
  EvalOptions opt;
  opt.exec = Execution::Serial;
  opt.bootstrap_resamples = 50;
  opt.seed = 7;
  Evaluation a = evaluate(analyses, Tokenizer::chars(), opt);
  Evaluation b = evaluate(analyses, Tokenizer::chars(), opt);
  REQUIRE(!a.report.intervals.empty());
  for (const char* key : {"f1_micro", "f1_macro", "lemma_boundary", "exact_match", "sw_per_word",
                          "overseg", "underseg", "cer", "wer", "fertility", "continuation_rate",
                          "lemma_single"}) {
    CAPTURE(key);
    REQUIRE(a.report.intervals.count(key) == 1);
    CHECK(a.report.intervals.at(key).low == b.report.intervals.at(key).low);
    CHECK(a.report.intervals.at(key).high == b.report.intervals.at(key).high);
    CHECK(a.report.intervals.at(key).low <= a.report.intervals.at(key).high);
  }
}
