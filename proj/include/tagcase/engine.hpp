#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "tagcase/bits.hpp"
#include "tagcase/errors.hpp"
#include "tagcase/lexer.hpp"

namespace tagcase {

struct StegoOptions {
  std::string key;
};

struct CapacityReport {
  std::size_t total_candidates = 0;
  std::size_t header_bits = kHeaderBits;
  std::size_t payload_capacity_bits = 0;
  std::size_t payload_capacity_bytes = 0;

  friend bool operator==(const CapacityReport&, const CapacityReport&) =
      default;
};

// Case forcing. Total on bytes: non-letters and letters already in the
// target case pass through unchanged.
constexpr unsigned char force_lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c + 32) : c;
}

constexpr unsigned char force_upper(unsigned char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<unsigned char>(c - 32) : c;
}

inline CapacityReport capacity(std::string_view cover) {
  CapacityReport report;
  report.total_candidates = count_candidates(cover);
  report.payload_capacity_bits =
      report.total_candidates > kHeaderBits
          ? report.total_candidates - kHeaderBits
          : 0;
  report.payload_capacity_bytes = report.payload_capacity_bits / 8;
  return report;
}

// Writes the raw bit sequence into the case of the cover's candidate
// letters: bit 0 forces lowercase, bit 1 forces uppercase. Candidates
// beyond the last bit keep their original case.
inline std::string embed_bits(std::string_view cover, const BitSequence& bits) {
  const std::size_t available = count_candidates(cover);
  if (bits.size() > available) throw CapacityExceeded(bits.size(), available);
  std::string stego(cover);
  std::size_t j = 0;
  scan_document(cover, [&](std::size_t offset, bool is_candidate) {
    if (!is_candidate || j >= bits.size()) return;
    const auto c = static_cast<unsigned char>(stego[offset]);
    stego[offset] = static_cast<char>(bits[j] ? force_upper(c) : force_lower(c));
    ++j;
  });
  return stego;
}

// Reads every candidate letter in document order as one bit: lowercase is
// 0, uppercase is 1.
inline BitSequence extract_bits(std::string_view stego) {
  BitSequence bits;
  scan_document(stego, [&](std::size_t offset, bool is_candidate) {
    if (!is_candidate) return;
    bits.push_back(ascii::is_upper(static_cast<unsigned char>(stego[offset])));
  });
  return bits;
}

inline std::string embed(std::string_view cover, std::string_view payload,
                         const StegoOptions& options = {}) {
  return embed_bits(cover, encode_frame(payload, options.key));
}

inline std::string extract(std::string_view stego,
                           const StegoOptions& options = {}) {
  return decode_frame(extract_bits(stego), options.key);
}

}  // namespace tagcase
