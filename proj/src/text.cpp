// Unicode handling for terms and free text, backed by ICU.

#include <string>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "termheat/corpus.hpp"
#include "termheat/error.hpp"

namespace termheat {
namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) throw std::runtime_error("ICU NFC data unavailable");
  return *n;
}

icu::UnicodeString to_nfc(const icu::UnicodeString& s) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(s, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  return out;
}

bool is_space(UChar32 c) { return u_isUWhiteSpace(c) != 0; }

// Letters, digits and combining marks. Marks keep scripts that use them from
// being split mid-word.
bool is_word_char(UChar32 c) {
  return u_isalnum(c) != 0 || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

std::string canonical(std::string_view raw) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  s = to_nfc(s);
  s.foldCase(U_FOLD_CASE_DEFAULT);
  s = to_nfc(s);

  // Trim and collapse whitespace runs to a single U+0020.
  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    i += U16_LENGTH(c);
    if (is_space(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) collapsed.append(static_cast<UChar>(0x20));
    pending_space = false;
    collapsed.append(c);
  }
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

}  // namespace

Term normalize_term(std::string_view raw) {
  std::string value = canonical(raw);
  if (value.empty()) throw Error(Errc::empty_term);
  return Term(std::move(value));
}

std::optional<Term> try_normalize_term(std::string_view raw) {
  try {
    return normalize_term(raw);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Term> tokenize(std::string_view text) {
  icu::UnicodeString s = to_nfc(icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size()))));

  std::vector<Term> tokens;
  icu::UnicodeString current;
  auto flush = [&] {
    if (current.isEmpty()) return;
    std::string utf8;
    current.toUTF8String(utf8);
    if (auto t = try_normalize_term(utf8)) tokens.push_back(std::move(*t));
    current.remove();
  };

  const int32_t n = s.length();
  for (int32_t i = 0; i < n;) {
    UChar32 c = s.char32At(i);
    int32_t next = i + U16_LENGTH(c);
    if (is_word_char(c)) {
      current.append(c);
    } else if (c == u'-' && !current.isEmpty() && next < n && is_word_char(s.char32At(next))) {
      current.append(c);
    } else {
      flush();
    }
    i = next;
  }
  flush();
  return tokens;
}

}  // namespace termheat
