#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tagcase/errors.hpp"

namespace tagcase {

// Ordered sequence of bits. Bytes expand most-significant bit first.
class BitSequence {
 public:
  BitSequence() = default;

  BitSequence(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) push_back(b != 0);
  }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }

  void append(const BitSequence& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  }

  void reserve(std::size_t n) { bits_.reserve(n); }

  BitSequence slice(std::size_t first, std::size_t count) const {
    BitSequence out;
    out.bits_.assign(bits_.begin() + first, bits_.begin() + first + count);
    return out;
  }

  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::size_t kHeaderBits = 32;

// Largest payload whose bit count still fits the 32-bit length header.
inline constexpr std::size_t kMaxPayloadBytes = (std::size_t{1} << 29) - 1;

inline BitSequence bytes_to_bits(std::string_view bytes) {
  BitSequence bits;
  bits.reserve(bytes.size() * 8);
  for (const char byte : bytes)
    for (int shift = 7; shift >= 0; --shift)
      bits.push_back((static_cast<unsigned char>(byte) >> shift) & 1);
  return bits;
}

inline std::string bits_to_bytes(const BitSequence& bits) {
  if (bits.size() % 8 != 0) throw NotByteAligned(bits.size());
  std::string bytes;
  bytes.reserve(bits.size() / 8);
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned value = 0;
    for (std::size_t j = 0; j < 8; ++j)
      value = (value << 1) | (bits[i + j] ? 1u : 0u);
    bytes.push_back(static_cast<char>(value));
  }
  return bytes;
}

// Repeating-key XOR. The empty key is the identity; applying the same key
// twice restores the input.
inline std::string xor_repeating_key(std::string_view data,
                                     std::string_view key) {
  std::string out(data);
  if (key.empty()) return out;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<char>(static_cast<unsigned char>(out[i]) ^
                               static_cast<unsigned char>(key[i % key.size()]));
  return out;
}

// Frame layout, bit-exact: bits 0..31 hold the payload bit count k as an
// unsigned big-endian integer; bits 32..32+k-1 hold the payload, MSB-first
// per byte. With a key, the four header bytes and the payload bytes are each
// XORed with the key repeated from its first byte.
inline BitSequence encode_frame(std::string_view payload,
                                std::string_view key = {}) {
  if (payload.size() > kMaxPayloadBytes) throw PayloadTooLarge(payload.size());
  const auto k = static_cast<std::uint32_t>(payload.size() * 8);
  const char header[4] = {
      static_cast<char>(k >> 24),
      static_cast<char>(k >> 16),
      static_cast<char>(k >> 8),
      static_cast<char>(k),
  };
  BitSequence bits;
  bits.reserve(kHeaderBits + payload.size() * 8);
  bits.append(bytes_to_bits(xor_repeating_key({header, 4}, key)));
  bits.append(bytes_to_bits(xor_repeating_key(payload, key)));
  return bits;
}

inline std::string decode_frame(const BitSequence& bits,
                                std::string_view key = {}) {
  if (bits.size() < kHeaderBits) throw TruncatedFrame(kHeaderBits, bits.size());
  const std::string header =
      xor_repeating_key(bits_to_bytes(bits.slice(0, kHeaderBits)), key);
  std::uint32_t k = 0;
  for (const char byte : header)
    k = (k << 8) | static_cast<unsigned char>(byte);
  if (k % 8 != 0) throw NotByteAligned(k);
  if (bits.size() < kHeaderBits + k)
    throw TruncatedFrame(kHeaderBits + k, bits.size());
  return xor_repeating_key(bits_to_bytes(bits.slice(kHeaderBits, k)), key);
}

}  // namespace tagcase
