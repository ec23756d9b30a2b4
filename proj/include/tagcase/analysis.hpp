#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "tagcase/lexer.hpp"

namespace tagcase {

using ByteHistogram = std::array<std::uint64_t, 256>;

struct LetterShift {
  std::int64_t lower_delta = 0;
  std::int64_t upper_delta = 0;

  friend bool operator==(const LetterShift&, const LetterShift&) = default;
};

struct HistogramReport {
  ByteHistogram cover_counts{};
  ByteHistogram stego_counts{};
  std::array<LetterShift, 26> per_letter_shift{};
  bool case_folded_equal = false;
};

inline ByteHistogram char_histogram(std::string_view doc) {
  ByteHistogram counts{};
  for (const char byte : doc) ++counts[static_cast<unsigned char>(byte)];
  return counts;
}

// case_folded_equal holds iff the stego document is the cover with some
// letters flipped in case: every lower+upper pair conserves its combined
// count and every non-letter bin is untouched.
inline HistogramReport compare(std::string_view cover, std::string_view stego) {
  HistogramReport report;
  report.cover_counts = char_histogram(cover);
  report.stego_counts = char_histogram(stego);

  auto delta = [&](unsigned char v) {
    return static_cast<std::int64_t>(report.stego_counts[v]) -
           static_cast<std::int64_t>(report.cover_counts[v]);
  };

  report.case_folded_equal = true;
  for (int i = 0; i < 26; ++i) {
    const auto lower = static_cast<unsigned char>('a' + i);
    const auto upper = static_cast<unsigned char>('A' + i);
    report.per_letter_shift[i] = {delta(lower), delta(upper)};
    if (delta(lower) + delta(upper) != 0) report.case_folded_equal = false;
  }
  for (int v = 0; v < 256; ++v) {
    const auto byte = static_cast<unsigned char>(v);
    if (ascii::is_letter(byte)) continue;
    if (delta(byte) != 0) report.case_folded_equal = false;
  }
  return report;
}

struct RenderEquivalence {
  bool equivalent = true;
  std::size_t divergence_offset = 0;
  std::string reason;
};

// Certifies that stego renders as cover does: same length, and every
// differing byte sits at a candidate position of cover and is the same
// letter in the opposite case.
inline RenderEquivalence render_equivalent(std::string_view cover,
                                           std::string_view stego) {
  RenderEquivalence verdict;
  if (cover.size() != stego.size()) {
    verdict.equivalent = false;
    verdict.divergence_offset = std::min(cover.size(), stego.size());
    verdict.reason = "length mismatch";
    return verdict;
  }
  scan_document(cover, [&](std::size_t offset, bool is_candidate) {
    if (!verdict.equivalent) return;
    const auto c = static_cast<unsigned char>(cover[offset]);
    const auto s = static_cast<unsigned char>(stego[offset]);
    if (c == s) return;
    if (!is_candidate) {
      verdict.equivalent = false;
      verdict.divergence_offset = offset;
      verdict.reason = "difference outside a candidate position";
    } else if (!ascii::is_letter(c) || !ascii::is_letter(s) ||
               (c ^ s) != 0x20) {
      verdict.equivalent = false;
      verdict.divergence_offset = offset;
      verdict.reason = "difference is not a case flip of the same letter";
    }
  });
  return verdict;
}

// One line per non-zero bin, then a case_folded_equal trailer. The second
// column shows the byte itself when graphic, else a dot.
inline std::string format_report(const HistogramReport& report) {
  std::string out;
  char line[80];
  for (int v = 0; v < 256; ++v) {
    const std::uint64_t cover = report.cover_counts[v];
    const std::uint64_t stego = report.stego_counts[v];
    if (cover == 0 && stego == 0) continue;
    const char shown = (v >= 0x21 && v <= 0x7E) ? static_cast<char>(v) : '.';
    std::snprintf(line, sizeof line,
                  "0x%02x %c cover=%llu stego=%llu delta=%lld\n", v, shown,
                  static_cast<unsigned long long>(cover),
                  static_cast<unsigned long long>(stego),
                  static_cast<long long>(stego) - static_cast<long long>(cover));
    out += line;
  }
  out += report.case_folded_equal ? "case_folded_equal=true\n"
                                  : "case_folded_equal=false\n";
  return out;
}

}  // namespace tagcase
