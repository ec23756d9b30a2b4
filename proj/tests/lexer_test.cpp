#include "tagcase/lexer.hpp"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/html_gen.hpp"

using tagcase::ClassifiedSpan;
using tagcase::SpanClass;
using tagcase::candidate_positions;
using tagcase::classify_stream;
using tagcase::count_candidates;
using tagcase::scan_document;

using Positions = std::vector<std::size_t>;

TEST(ClassifyStream, SimpleTagSpans) {
  const std::vector<ClassifiedSpan> want = {
      {0, 1, SpanClass::PassThrough},
      {1, 5, SpanClass::Candidate},
      {5, 6, SpanClass::PassThrough},
  };
  EXPECT_EQ(classify_stream("<head>"), want);
}

TEST(ClassifyStream, PlainTextIsOneSpan) {
  const std::vector<ClassifiedSpan> want = {{0, 11, SpanClass::PassThrough}};
  EXPECT_EQ(classify_stream("hello world"), want);
}

TEST(ClassifyStream, EmptyInput) {
  EXPECT_TRUE(classify_stream("").empty());
}

TEST(CandidatePositions, TagNameLetters) {
  EXPECT_EQ(candidate_positions("<head>"), (Positions{1, 2, 3, 4}));
}

TEST(CandidatePositions, AttributeNameYesValueNo) {
  // h + align; the digit, quotes and the value carry nothing.
  EXPECT_EQ(candidate_positions("<h2 align=\"center\">"),
            (Positions{1, 4, 5, 6, 7, 8}));
}

TEST(CandidatePositions, EndTagLetters) {
  EXPECT_EQ(candidate_positions("<b></b>"), (Positions{1, 5}));
  EXPECT_EQ(candidate_positions("<head>x</head>"),
            (Positions{1, 2, 3, 4, 9, 10, 11, 12}));
}

TEST(CandidatePositions, UppercaseLettersCount) {
  EXPECT_EQ(candidate_positions("<A HREF=\"x.html\">"),
            (Positions{1, 3, 4, 5, 6}));
}

TEST(CandidatePositions, SingleQuotedValueExcluded) {
  EXPECT_EQ(candidate_positions("<a href='x.html'>"),
            (Positions{1, 3, 4, 5, 6}));
}

TEST(CandidatePositions, UnquotedValueExcluded) {
  EXPECT_EQ(candidate_positions("<input type=text>"),
            (Positions{1, 2, 3, 4, 5, 7, 8, 9, 10}));
}

TEST(CandidatePositions, BareAttribute) {
  // d,i,v + h,i,d,d,e,n
  EXPECT_EQ(candidate_positions("<div hidden>"),
            (Positions{1, 2, 3, 5, 6, 7, 8, 9, 10}));
}

TEST(CandidatePositions, SelfClosingTag) {
  EXPECT_EQ(candidate_positions("<br/>"), (Positions{1, 2}));
}

TEST(CandidatePositions, CommentsCarryNothing) {
  EXPECT_EQ(candidate_positions("<!-- <b> -->"), Positions{});
  EXPECT_EQ(candidate_positions("<!-- a -- b -->x<i>"),
            (Positions{17}));
}

TEST(CandidatePositions, AbruptCommentClose) {
  EXPECT_EQ(candidate_positions("<!--><b>"), (Positions{6}));
  EXPECT_EQ(candidate_positions("<!---><b>"), (Positions{7}));
}

TEST(CandidatePositions, DeclarationsCarryNothing) {
  EXPECT_EQ(candidate_positions("<!DOCTYPE html><p>"), (Positions{16}));
  EXPECT_EQ(candidate_positions("<![CDATA[x]]><p>"), (Positions{14}));
  EXPECT_EQ(candidate_positions("<!><b>"), (Positions{4}));
}

TEST(CandidatePositions, ProcessingInstructionIsBogus) {
  EXPECT_EQ(candidate_positions("<?php echo 1 ?><p>"), (Positions{16}));
}

TEST(CandidatePositions, MalformedEndTagIsBogus) {
  EXPECT_EQ(candidate_positions("</ div><p>"), (Positions{8}));
  EXPECT_EQ(candidate_positions("</><p>"), (Positions{4}));
}

TEST(CandidatePositions, StrayAngleBrackets) {
  EXPECT_EQ(candidate_positions("a < b > c"), Positions{});
  EXPECT_EQ(candidate_positions("<<b>"), (Positions{2}));
  EXPECT_EQ(candidate_positions("<1between><b>"), (Positions{11}));
}

TEST(CandidatePositions, NonAsciiBytesNeverCandidates) {
  // Tag letters yes; the two UTF-8 bytes of é never.
  const std::string html = "<d\xC3\xA9v>";
  EXPECT_EQ(candidate_positions(html), (Positions{1, 4}));
}

TEST(RawText, ScriptContentIsInert) {
  //             0123456789012345678901 2
  const std::string html = "<script>a < b</script>";
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 6, 15, 16, 17, 18, 19, 20}));
}

TEST(RawText, StyleContentIsInert) {
  const std::string html = "<style>p > a {}</style>";
  // s,t,y,l,e at 1..5; end tag letters at 17..21.
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 17, 18, 19, 20, 21}));
}

TEST(RawText, EndTagMatchIsCaseInsensitive) {
  const std::string html = "<script>x</SCRIPT><b>";
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 6, 11, 12, 13, 14, 15, 16, 19}));
}

TEST(RawText, PartialEndTagStaysRawText) {
  // "</scr" aborts; the real end tag still closes the element.
  const std::string html = "<script>//</scr</script>";
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 6, 17, 18, 19, 20, 21, 22}));
}

TEST(RawText, WrongEndTagIgnored) {
  // </style> does not close a script element.
  const std::string html = "<script></style></script>";
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 6, 18, 19, 20, 21, 22, 23}));
}

TEST(RawText, LongerNameDoesNotClose) {
  // </scripty> is not an end tag for script.
  const std::string html = "<script></scripty;</script>";
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 6, 20, 21, 22, 23, 24, 25}));
}

TEST(RawText, EndTagClosedBySpaceOrSlash) {
  EXPECT_EQ(candidate_positions("<script></script >"),
            (Positions{1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 14, 15}));
  EXPECT_EQ(candidate_positions("<script></script/>"),
            (Positions{1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 14, 15}));
}

TEST(RawText, UnterminatedBufferDrains) {
  EXPECT_EQ(candidate_positions("<script>x</scri"),
            (Positions{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(candidate_positions("<script>x<"), (Positions{1, 2, 3, 4, 5, 6}));
}

TEST(RawText, MixedCaseOpenTagEntersRawText) {
  const std::string html = "<ScRiPt>a<b</sCrIpT>";
  EXPECT_EQ(candidate_positions(html),
            (Positions{1, 2, 3, 4, 5, 6, 13, 14, 15, 16, 17, 18}));
}

TEST(CountCandidates, MatchesPositions) {
  const std::string html = "<div class=\"row\"><span id=\"a\">x</span></div>";
  EXPECT_EQ(count_candidates(html), candidate_positions(html).size());
  EXPECT_EQ(count_candidates(html), 21u);
}

// The scanner must be total: any byte soup is classified, every byte exactly
// once, in order, spans contiguous and alternating.
TEST(ScanDocument, TotalOnArbitraryBytes) {
  std::mt19937 rng(20260816);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = rng() % 300;
    std::string soup = testgen::random_bytes(rng, n);

    std::size_t expected_offset = 0;
    scan_document(soup, [&](std::size_t offset, bool) {
      ASSERT_EQ(offset, expected_offset);
      ++expected_offset;
    });
    ASSERT_EQ(expected_offset, soup.size());

    const auto spans = classify_stream(soup);
    std::size_t cursor = 0;
    for (std::size_t s = 0; s < spans.size(); ++s) {
      ASSERT_EQ(spans[s].begin, cursor);
      ASSERT_LT(spans[s].begin, spans[s].end);
      if (s > 0) {
        ASSERT_NE(spans[s].cls, spans[s - 1].cls);
      }
      cursor = spans[s].end;
    }
    ASSERT_EQ(cursor, soup.size());
  }
}

// Flipping the case of candidate letters must not change the span structure;
// extraction depends on seeing the same candidate stream the embedder saw.
TEST(ScanDocument, ClassificationIgnoresCandidateCase) {
  std::mt19937 rng(96011);
  for (int round = 0; round < 100; ++round) {
    const std::string doc = testgen::random_document(rng);
    const auto spans = classify_stream(doc);

    std::string flipped = doc;
    for (std::size_t pos : candidate_positions(doc))
      if (rng() % 2) flipped[pos] = static_cast<char>(flipped[pos] ^ 0x20);

    ASSERT_EQ(classify_stream(flipped), spans) << doc;
  }
}

TEST(ScanDocument, AgreesWithNaiveOracleOnRestrictedDocs) {
  std::mt19937 rng(41507);
  const auto opt = testgen::restricted_options();
  for (int round = 0; round < 200; ++round) {
    const std::string doc = testgen::random_document(rng, opt);
    ASSERT_EQ(candidate_positions(doc), testgen::naive_candidate_oracle(doc))
        << doc;
  }
}
