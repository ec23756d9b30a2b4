#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Single-pass scanner that splits an HTML byte stream into the letters whose
// case a browser ignores (tag names and attribute names) and everything else.
//
// State machine sketch:
//
//   Outside
//     "<", TagOpen
//   TagOpen
//     letter, TagName        "/", EndTagOpen     "!", MarkupDeclaration
//     "?", Doctype (bogus region, runs to ">")   "<", stay
//     anything else, Outside
//   EndTagOpen
//     letter, TagName        ">", Outside        else, Doctype (bogus)
//   TagName
//     space or "/", BeforeAttrName               ">", close tag
//   BeforeAttrName
//     letter, AttrName       ">", close tag      "=" etc., AttrName
//   AttrName
//     space, AfterAttrName   "=", BeforeAttrValue
//     "/", BeforeAttrName    ">", close tag
//   AfterAttrName
//     "=", BeforeAttrValue   ">", close tag      else, new AttrName
//   BeforeAttrValue
//     quote, AttrValue*Quoted                    ">", close tag
//     else, AttrValueUnquoted
//   AttrValue*Quoted: until the matching quote   AttrValueUnquoted: until space or ">"
//   MarkupDeclaration ("<!")
//     "--", Comment          ">", Outside        else, Doctype
//   Comment: until "-->" (an immediate ">" or "->" also closes)
//   Doctype: declaration or bogus text, until ">"
//   RawText: after <script>/<style>, until the matching case-insensitive end tag
//
// Closing a start tag named script or style enters RawText. Attribute values,
// comments, declarations and raw text never produce candidates.

namespace tagcase {

enum class LexerState {
  Outside,
  TagOpen,
  EndTagOpen,
  TagName,
  BeforeAttrName,
  AttrName,
  AfterAttrName,
  BeforeAttrValue,
  AttrValueDoubleQuoted,
  AttrValueSingleQuoted,
  AttrValueUnquoted,
  MarkupDeclaration,
  Comment,
  Doctype,
  RawText,
};

enum class SpanClass : std::uint8_t { Candidate, PassThrough };

// Contiguous byte range [begin, end) sharing one classification.
struct ClassifiedSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  SpanClass cls = SpanClass::PassThrough;

  friend bool operator==(const ClassifiedSpan&,
                         const ClassifiedSpan&) = default;
};

namespace ascii {

constexpr bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(unsigned char c) { return c >= 'a' && c <= 'z'; }
constexpr bool is_letter(unsigned char c) { return is_upper(c) || is_lower(c); }

constexpr bool is_tag_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r';
}

constexpr unsigned char to_lower(unsigned char c) {
  return is_upper(c) ? static_cast<unsigned char>(c + 32) : c;
}

}  // namespace ascii

// Runs the scanner over the whole document. emit(offset, is_candidate) is
// called exactly once per byte, in strictly increasing offset order. The
// machine is total: arbitrary byte soup degrades to pass-through, never fails.
template <typename Emit>
void scan_document(std::string_view html, Emit&& emit) {
  using namespace ascii;

  // Longest element name that matters is "script"; longer names are tracked
  // only far enough to know they are something else.
  constexpr std::size_t kMaxTrackedName = 8;

  LexerState state = LexerState::Outside;
  std::string tag_name;  // current tag name, ASCII-lowercased, truncated
  bool end_tag = false;
  int comment_dashes = 0;  // trailing '-' run inside Comment
  bool decl_dash = false;  // '-' already seen in MarkupDeclaration

  // RawText end-tag buffer: holds "<", "/" and the matched needle prefix.
  // Classification of those bytes is deferred until the match resolves.
  std::string_view needle;        // "script" or "style"
  std::size_t pending_begin = 0;  // offset of the buffered '<'
  std::size_t pending = 0;        // buffered byte count

  auto close_tag = [&] {
    if (!end_tag && (tag_name == "script" || tag_name == "style")) {
      needle = tag_name == "script" ? std::string_view{"script"}
                                    : std::string_view{"style"};
      pending = 0;
      state = LexerState::RawText;
    } else {
      state = LexerState::Outside;
    }
  };

  for (std::size_t i = 0; i < html.size(); ++i) {
    const auto c = static_cast<unsigned char>(html[i]);
    switch (state) {
      case LexerState::Outside:
        if (c == '<') state = LexerState::TagOpen;
        emit(i, false);
        break;

      case LexerState::TagOpen:
        if (is_letter(c)) {
          tag_name.assign(1, static_cast<char>(to_lower(c)));
          end_tag = false;
          state = LexerState::TagName;
          emit(i, true);
        } else if (c == '/') {
          state = LexerState::EndTagOpen;
          emit(i, false);
        } else if (c == '!') {
          decl_dash = false;
          state = LexerState::MarkupDeclaration;
          emit(i, false);
        } else if (c == '?') {
          state = LexerState::Doctype;  // "<?...>" runs to the next '>'
          emit(i, false);
        } else if (c == '<') {
          emit(i, false);  // previous '<' was text; this one may open a tag
        } else {
          state = LexerState::Outside;  // the '<' was ordinary text
          emit(i, false);
        }
        break;

      case LexerState::EndTagOpen:
        if (is_letter(c)) {
          tag_name.assign(1, static_cast<char>(to_lower(c)));
          end_tag = true;
          state = LexerState::TagName;
          emit(i, true);
        } else if (c == '>') {
          state = LexerState::Outside;  // "</>"
          emit(i, false);
        } else {
          state = LexerState::Doctype;  // "</ ..." bogus region, runs to '>'
          emit(i, false);
        }
        break;

      case LexerState::TagName:
        if (is_tag_space(c) || c == '/') {
          state = LexerState::BeforeAttrName;
          emit(i, false);
        } else if (c == '>') {
          close_tag();
          emit(i, false);
        } else {
          if (tag_name.size() < kMaxTrackedName)
            tag_name += static_cast<char>(to_lower(c));
          emit(i, is_letter(c));
        }
        break;

      case LexerState::BeforeAttrName:
        if (is_tag_space(c) || c == '/') {
          emit(i, false);
        } else if (c == '>') {
          close_tag();
          emit(i, false);
        } else {
          state = LexerState::AttrName;
          emit(i, is_letter(c));
        }
        break;

      case LexerState::AttrName:
        if (is_tag_space(c)) {
          state = LexerState::AfterAttrName;
          emit(i, false);
        } else if (c == '=') {
          state = LexerState::BeforeAttrValue;
          emit(i, false);
        } else if (c == '>') {
          close_tag();
          emit(i, false);
        } else if (c == '/') {
          state = LexerState::BeforeAttrName;
          emit(i, false);
        } else {
          emit(i, is_letter(c));
        }
        break;

      case LexerState::AfterAttrName:
        if (is_tag_space(c)) {
          emit(i, false);
        } else if (c == '=') {
          state = LexerState::BeforeAttrValue;
          emit(i, false);
        } else if (c == '>') {
          close_tag();
          emit(i, false);
        } else if (c == '/') {
          state = LexerState::BeforeAttrName;
          emit(i, false);
        } else {
          state = LexerState::AttrName;  // a new attribute starts here
          emit(i, is_letter(c));
        }
        break;

      case LexerState::BeforeAttrValue:
        if (is_tag_space(c)) {
          emit(i, false);
        } else if (c == '"') {
          state = LexerState::AttrValueDoubleQuoted;
          emit(i, false);
        } else if (c == '\'') {
          state = LexerState::AttrValueSingleQuoted;
          emit(i, false);
        } else if (c == '>') {
          close_tag();
          emit(i, false);
        } else {
          state = LexerState::AttrValueUnquoted;
          emit(i, false);
        }
        break;

      case LexerState::AttrValueDoubleQuoted:
        if (c == '"') state = LexerState::BeforeAttrName;
        emit(i, false);
        break;

      case LexerState::AttrValueSingleQuoted:
        if (c == '\'') state = LexerState::BeforeAttrName;
        emit(i, false);
        break;

      case LexerState::AttrValueUnquoted:
        if (is_tag_space(c)) {
          state = LexerState::BeforeAttrName;
          emit(i, false);
        } else if (c == '>') {
          close_tag();
          emit(i, false);
        } else {
          emit(i, false);
        }
        break;

      case LexerState::MarkupDeclaration:
        if (c == '-') {
          if (decl_dash) {
            state = LexerState::Comment;
            comment_dashes = 2;  // lets "<!-->" and "<!--->" close at once
          } else {
            decl_dash = true;
          }
        } else if (c == '>') {
          state = LexerState::Outside;  // "<!>" or "<!->"
        } else {
          state = LexerState::Doctype;  // doctype, CDATA-like or bogus "<!"
        }
        emit(i, false);
        break;

      case LexerState::Comment:
        if (c == '-') {
          ++comment_dashes;
        } else if (c == '>' && comment_dashes >= 2) {
          state = LexerState::Outside;
        } else {
          comment_dashes = 0;
        }
        emit(i, false);
        break;

      case LexerState::Doctype:
        if (c == '>') state = LexerState::Outside;
        emit(i, false);
        break;

      case LexerState::RawText: {
        if (pending == 0) {
          if (c == '<') {
            pending_begin = i;
            pending = 1;
          } else {
            emit(i, false);
          }
          break;
        }
        if (pending == 1) {
          if (c == '/') {
            pending = 2;
          } else if (c == '<') {
            emit(pending_begin, false);
            pending_begin = i;  // restart on the new '<'
          } else {
            emit(pending_begin, false);
            emit(i, false);
            pending = 0;
          }
          break;
        }
        const std::size_t matched = pending - 2;
        if (matched < needle.size() &&
            to_lower(c) == static_cast<unsigned char>(needle[matched])) {
          ++pending;
          break;
        }
        if (matched == needle.size() &&
            (is_tag_space(c) || c == '/' || c == '>')) {
          // Confirmed end tag: the buffered name letters were tag-name
          // letters after all.
          emit(pending_begin, false);
          emit(pending_begin + 1, false);
          for (std::size_t j = 0; j < needle.size(); ++j)
            emit(pending_begin + 2 + j, true);
          pending = 0;
          tag_name.assign(needle);
          end_tag = true;
          state = c == '>' ? LexerState::Outside : LexerState::BeforeAttrName;
          emit(i, false);
          break;
        }
        // Mismatch: the buffered bytes were ordinary raw text.
        emit(pending_begin, false);
        emit(pending_begin + 1, false);
        for (std::size_t j = 0; j < matched; ++j)
          emit(pending_begin + 2 + j, false);
        if (c == '<') {
          pending_begin = i;
          pending = 1;
        } else {
          emit(i, false);
          pending = 0;
        }
        break;
      }
    }
  }

  // An unresolved raw-text end-tag buffer drains as plain raw text.
  if (state == LexerState::RawText && pending > 0) {
    emit(pending_begin, false);
    for (std::size_t j = 1; j < pending; ++j) emit(pending_begin + j, false);
  }
}

// Complete, ordered, non-overlapping cover of [0, html.size()). Adjacent
// same-class bytes coalesce into one span.
inline std::vector<ClassifiedSpan> classify_stream(std::string_view html) {
  std::vector<ClassifiedSpan> spans;
  scan_document(html, [&](std::size_t offset, bool candidate) {
    const SpanClass cls =
        candidate ? SpanClass::Candidate : SpanClass::PassThrough;
    if (!spans.empty() && spans.back().cls == cls &&
        spans.back().end == offset) {
      ++spans.back().end;
    } else {
      spans.push_back({offset, offset + 1, cls});
    }
  });
  return spans;
}

// Strictly increasing offsets of every candidate letter.
inline std::vector<std::size_t> candidate_positions(std::string_view html) {
  std::vector<std::size_t> positions;
  scan_document(html, [&](std::size_t offset, bool candidate) {
    if (candidate) positions.push_back(offset);
  });
  return positions;
}

inline std::size_t count_candidates(std::string_view html) {
  std::size_t count = 0;
  scan_document(html, [&](std::size_t, bool candidate) {
    if (candidate) ++count;
  });
  return count;
}

}  // namespace tagcase
