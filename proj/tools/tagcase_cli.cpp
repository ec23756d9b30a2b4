// Command-line front-end: embed, extract, capacity, analyze.
//
// Exit codes: 0 success, 2 capacity errors, 3 frame errors, 4 I/O or
// usage errors. Payloads and documents are treated as raw bytes
// throughout; nothing is re-encoded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "tagcase/tagcase.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for reading");
  return {std::istreambuf_iterator<char>(file),
          std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::fwrite(data.data(), 1, data.size(), stdout);
    if (std::fflush(stdout) != 0) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!file) throw IoError("cannot write " + path);
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0)
    throw UsageError("--msg-hex needs an even number of hex digits");
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]);
    const int lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0)
      throw UsageError("--msg-hex contains a non-hex character");
    bytes.push_back(static_cast<char>(hi << 4 | lo));
  }
  return bytes;
}

std::string to_hex(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(bytes.size() * 2);
  for (const char byte : bytes) {
    const auto v = static_cast<unsigned char>(byte);
    hex.push_back(digits[v >> 4]);
    hex.push_back(digits[v & 0xF]);
  }
  return hex;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hide bytes in the letter case of HTML tag and attribute names"};
  app.require_subcommand(1);

  std::string cover_path, stego_path, msg_path, msg_hex, key, out_path, format;

  auto* embed = app.add_subcommand("embed", "Embed a message into a cover page");
  embed->add_option("--cover", cover_path, "Cover HTML file, - for stdin")
      ->required();
  auto* msg_opt =
      embed->add_option("--msg", msg_path, "Message file, - for stdin");
  auto* hex_opt =
      embed->add_option("--msg-hex", msg_hex, "Message as a hex string");
  msg_opt->excludes(hex_opt);
  hex_opt->excludes(msg_opt);
  embed->add_option("--key", key, "XOR key (raw bytes of this string)");
  embed->add_option("--out", out_path, "Output file, default stdout");

  auto* extract =
      app.add_subcommand("extract", "Recover the message from a stego page");
  extract->add_option("--stego", stego_path, "Stego HTML file, - for stdin")
      ->required();
  extract->add_option("--key", key, "XOR key (raw bytes of this string)");
  extract->add_option("--out", out_path, "Output file, default stdout");
  extract->add_option("--format", format, "Output format: raw or hex")
      ->check(CLI::IsMember({"raw", "hex"}))
      ->default_val("raw");

  auto* capacity =
      app.add_subcommand("capacity", "Report how much a cover page can carry");
  capacity->add_option("--cover", cover_path, "Cover HTML file, - for stdin")
      ->required();

  auto* analyze = app.add_subcommand(
      "analyze", "Compare cover and stego byte histograms");
  analyze->add_option("--cover", cover_path, "Cover HTML file, - for stdin")
      ->required();
  analyze->add_option("--stego", stego_path, "Stego HTML file, - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    int stdin_roles = 0;
    for (const std::string* p : {&cover_path, &stego_path, &msg_path})
      if (*p == "-") ++stdin_roles;
    if (stdin_roles > 1)
      throw UsageError("- (stdin) may be used for at most one input");

    const tagcase::StegoOptions options{key};

    if (embed->parsed()) {
      std::string payload;
      if (hex_opt->count() > 0)
        payload = parse_hex(msg_hex);
      else if (msg_opt->count() > 0)
        payload = read_input(msg_path);
      else
        throw UsageError("embed needs --msg or --msg-hex");
      write_output(out_path,
                   tagcase::embed(read_input(cover_path), payload, options));
    } else if (extract->parsed()) {
      std::string payload = tagcase::extract(read_input(stego_path), options);
      if (format == "hex") payload = to_hex(payload) + "\n";
      write_output(out_path, payload);
    } else if (capacity->parsed()) {
      const auto report = tagcase::capacity(read_input(cover_path));
      std::printf("total_candidates=%zu\n", report.total_candidates);
      std::printf("header_bits=%zu\n", report.header_bits);
      std::printf("payload_capacity_bits=%zu\n", report.payload_capacity_bits);
      std::printf("payload_capacity_bytes=%zu\n",
                  report.payload_capacity_bytes);
    } else if (analyze->parsed()) {
      const auto report = tagcase::compare(read_input(cover_path),
                                           read_input(stego_path));
      const std::string text = tagcase::format_report(report);
      std::fwrite(text.data(), 1, text.size(), stdout);
    }
  } catch (const tagcase::CapacityExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const tagcase::PayloadTooLarge& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const tagcase::TruncatedFrame& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const tagcase::NotByteAligned& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 0;
}
