#include "qc/permutation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qc {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..m: value " +
                                  std::to_string(v));
    seen[v - 1] = true;
  }
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation input");
  std::vector<int> image;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("permutation digits must be 1-9");
      image.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      image.push_back(std::stoi(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::identity(int m) {
  std::vector<int> image(m);
  for (int i = 0; i < m; ++i) image[i] = i + 1;
  return Permutation(std::move(image));
}

Permutation Permutation::longest(int m) {
  std::vector<int> image(m);
  for (int i = 0; i < m; ++i) image[i] = m - i;
  return Permutation(std::move(image));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (image_[i] > image_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> image(size());
  for (int i = 1; i <= size(); ++i) image[image_[i - 1] - 1] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::shifted(int n) const {
  std::vector<int> image(n + size());
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  for (int i = 0; i < size(); ++i) image[n + i] = image_[i] + n;
  return Permutation(std::move(image));
}

Permutation Permutation::padded(int m) const {
  if (m < size()) throw std::invalid_argument("cannot pad downwards");
  std::vector<int> image = image_;
  for (int i = size(); i < m; ++i) image.push_back(i + 1);
  return Permutation(std::move(image));
}

Permutation Permutation::trimmed() const {
  std::vector<int> image = image_;
  while (image.size() > 1 && image.back() == static_cast<int>(image.size()))
    image.pop_back();
  return Permutation(std::move(image));
}

Permutation Permutation::after_transposition(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("bad reflection");
  std::vector<int> image = image_;
  std::swap(image[i - 1], image[i]);
  return Permutation(std::move(image));
}

int Permutation::rank_function(int p, int q) const {
  int c = 0;
  for (int i = 1; i <= p; ++i)
    if ((*this)(i) <= q) ++c;
  return c;
}

int Permutation::inversions_before(int p) const {
  int c = 0;
  for (int q = 1; q < p; ++q)
    if ((*this)(q) > (*this)(p)) ++c;
  return c;
}

std::string Permutation::str() const {
  bool digits = size() <= 9;
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(image_[i]);
  }
  return s;
}

Permutation cross(const Permutation& w, const Permutation& u) {
  int m = w.size();
  std::vector<int> image = w.image();
  for (int v : u.image()) image.push_back(v + m);
  return Permutation(std::move(image));
}

std::vector<Permutation> symmetric_group(int m) {
  std::vector<int> image(m);
  for (int i = 0; i < m; ++i) image[i] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(Permutation(image));
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  // peel descents from the right: w = v * s_i with l(v) = l(w)-1
  std::function<void(const Permutation&)> rec = [&](const Permutation& v) {
    bool any = false;
    for (int i = 1; i < v.size(); ++i) {
      if (v(i) > v(i + 1)) {
        any = true;
        word.push_back(i);
        rec(v.after_transposition(i));
        word.pop_back();
      }
    }
    if (!any) {
      out.emplace_back(word.rbegin(), word.rend());
    }
  };
  rec(w);
  return out;
}

std::vector<int> first_reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation v = w;
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < v.size(); ++i)
      if (v(i) > v(i + 1)) {
        word.push_back(i);
        v = v.after_transposition(i);
        found = true;
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace qc
