#include "wstrata/text_format.hpp"

#include <sstream>

#include "wstrata/errors.hpp"

namespace wstrata {

std::string render_word(const CanonicalWord& w) {
  std::ostringstream out;
  bool first = true;
  const auto sep = [&]() -> std::ostream& {
    if (!first) out << ' ';
    first = false;
    return out;
  };
  if (w.tau_power == 1)
    sep() << 't';
  else if (w.tau_power != 0)
    sep() << "t^" << w.tau_power;
  for (int letter : w.letters) sep() << 's' << letter;
  if (first) out << 'e';
  return out.str();
}

std::string render_element(const GroupContext& ctx, const ExtElement& x) {
  return render_word(reduced_word(ctx, x));
}

ExtElement parse_element(const GroupContext& ctx, const std::string& text) {
  std::istringstream in(text);
  ExtElement x = ExtElement::identity(ctx.rank());
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    if (token == "e") continue;
    if (token == "t") {
      x = x * tau(ctx);
      continue;
    }
    if (token.rfind("t^", 0) == 0) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(token.substr(2), &used);
      } catch (const std::exception&) {
        throw FormatError("bad element token: " + token);
      }
      if (used != token.size() - 2) throw FormatError("bad element token: " + token);
      x = x * tau_power(ctx, k);
      continue;
    }
    if (token.size() >= 2 && token[0] == 's') {
      std::size_t used = 0;
      int i = 0;
      try {
        i = std::stoi(token.substr(1), &used);
      } catch (const std::exception&) {
        throw FormatError("bad element token: " + token);
      }
      if (used != token.size() - 1 || i < 0 || i > ctx.rank())
        throw FormatError("generator index out of range: " + token);
      x = x * simple_reflection(ctx, i);
      continue;
    }
    throw FormatError("bad element token: " + token);
  }
  if (!any) throw FormatError("empty element word");
  return x;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw FormatError("bad index list entry: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw FormatError("bad index list entry: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw FormatError("empty index list");
  return out;
}

}  // namespace wstrata
