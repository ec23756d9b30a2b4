#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tagcase {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bit count was expected to describe whole bytes but does not.
class NotByteAligned : public Error {
 public:
  explicit NotByteAligned(std::size_t bit_count)
      : Error("bit count " + std::to_string(bit_count) +
              " is not a multiple of 8"),
        bit_count_(bit_count) {}

  std::size_t bit_count() const noexcept { return bit_count_; }

 private:
  std::size_t bit_count_;
};

// The bit stream ran out before the frame it declares was complete.
class TruncatedFrame : public Error {
 public:
  TruncatedFrame(std::size_t needed_bits, std::size_t available_bits)
      : Error("frame needs " + std::to_string(needed_bits) +
              " bits but only " + std::to_string(available_bits) +
              " are available"),
        needed_bits_(needed_bits),
        available_bits_(available_bits) {}

  std::size_t needed_bits() const noexcept { return needed_bits_; }
  std::size_t available_bits() const noexcept { return available_bits_; }

 private:
  std::size_t needed_bits_;
  std::size_t available_bits_;
};

// The payload cannot be described by the 32-bit length header.
class PayloadTooLarge : public Error {
 public:
  explicit PayloadTooLarge(std::size_t payload_bytes)
      : Error("payload of " + std::to_string(payload_bytes) +
              " bytes exceeds the 32-bit frame header limit"),
        payload_bytes_(payload_bytes) {}

  std::size_t payload_bytes() const noexcept { return payload_bytes_; }

 private:
  std::size_t payload_bytes_;
};

// The cover document has fewer candidate letters than the frame needs.
class CapacityExceeded : public Error {
 public:
  CapacityExceeded(std::size_t needed_bits, std::size_t available_bits)
      : Error("frame needs " + std::to_string(needed_bits) +
              " bits but the cover has only " +
              std::to_string(available_bits) + " candidate letters"),
        needed_bits_(needed_bits),
        available_bits_(available_bits) {}

  std::size_t needed_bits() const noexcept { return needed_bits_; }
  std::size_t available_bits() const noexcept { return available_bits_; }

 private:
  std::size_t needed_bits_;
  std::size_t available_bits_;
};

}  // namespace tagcase
