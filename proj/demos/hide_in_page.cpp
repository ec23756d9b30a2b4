// Walks the whole pipeline on a small page: capacity, embed, extract,
// histogram verdict. The stego page renders identically to the cover;
// the secret lives in the case of the tag and attribute letters.

#include <cstdio>
#include <string>

#include "tagcase/tagcase.hpp"

int main() {
  const std::string cover =
      "<html>\n"
      "<head><title>Plain page</title></head>\n"
      "<body>\n"
      "<div class=\"row\"><span id=\"greeting\">Hello!</span></div>\n"
      "<div class=\"row\"><a href=\"/about\">About us</a></div>\n"
      "<div class=\"row\"><img src=\"logo.png\" alt=\"logo\"></div>\n"
      "</body>\n"
      "</html>\n";

  const auto report = tagcase::capacity(cover);
  std::printf("cover holds %zu candidate letters -> %zu payload bytes\n",
              report.total_candidates, report.payload_capacity_bytes);

  const tagcase::StegoOptions options{"sesame"};
  const std::string stego = tagcase::embed(cover, "hi", options);
  std::printf("\n--- stego page ---\n%s", stego.c_str());

  const std::string recovered = tagcase::extract(stego, options);
  std::printf("\nrecovered: \"%s\"\n", recovered.c_str());

  const auto verdict = tagcase::render_equivalent(cover, stego);
  const auto histogram = tagcase::compare(cover, stego);
  std::printf("render_equivalent=%s case_folded_equal=%s\n",
              verdict.equivalent ? "true" : "false",
              histogram.case_folded_equal ? "true" : "false");
  return 0;
}
