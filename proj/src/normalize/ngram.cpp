// Copyright 2026 The cryptext Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

#include "cryptext/checksum.hpp"
#include "cryptext/error.hpp"
#include "cryptext/normalize.hpp"
#include "io_util.hpp"

namespace cryptext {
namespace {

constexpr std::string_view kLmMagic = "CRYPTEXT-LM";

std::string join(std::span<const std::string_view> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorCode::kCorruptFile, "language model file: " + what);
}

}  // namespace

NGramModel::NGramModel(int order, double alpha) : order_(order), alpha_(alpha) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "smoothing constant must be > 0");
  }
  tables_.resize(static_cast<std::size_t>(order));
}

void NGramModel::add_count(int order, const std::string& context, const std::string& word,
                           std::uint64_t n) {
  auto& entry = tables_[static_cast<std::size_t>(order - 1)][context];
  entry.total += n;
  entry.next[word] += n;
  if (order == 1) vocabulary_.insert(word);
}

void NGramModel::add_sentence(std::span<const std::string> tokens) {
  std::vector<std::string_view> seq(static_cast<std::size_t>(order_ - 1), kBos);
  for (const auto& t : tokens) seq.push_back(t);
  seq.push_back(kEos);
  for (std::size_t p = static_cast<std::size_t>(order_ - 1); p < seq.size(); ++p) {
    const std::string word(seq[p]);
    for (int m = 1; m <= order_; ++m) {
      const auto ctx = std::span(seq).subspan(p + 1 - static_cast<std::size_t>(m),
                                              static_cast<std::size_t>(m - 1));
      add_count(m, join(ctx), word, 1);
    }
  }
}

std::vector<std::string> NGramModel::vocabulary() const {
  std::vector<std::string> out(vocabulary_.begin(), vocabulary_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view NGramModel::known(std::string_view token) const {
  if (token == kBos) return kBos;
  auto it = vocabulary_.find(std::string(token));
  return it == vocabulary_.end() ? kUnk : std::string_view(*it);
}

double NGramModel::probability(std::span<const std::string> context,
                               std::string_view word) const {
  const auto width = static_cast<std::size_t>(order_ - 1);
  std::vector<std::string_view> ctx;
  ctx.reserve(width);
  const std::size_t have = std::min(width, context.size());
  for (std::size_t i = have; i < width; ++i) ctx.push_back(kBos);
  for (std::size_t i = context.size() - have; i < context.size(); ++i) {
    ctx.push_back(known(context[i]));
  }
  std::string_view w = known(word);
  if (w == kBos) w = kUnk;

  std::uint64_t joint = 0;
  std::uint64_t total = 0;
  const auto& table = tables_[width];
  if (auto it = table.find(join(ctx)); it != table.end()) {
    total = it->second.total;
    if (auto jt = it->second.next.find(std::string(w)); jt != it->second.next.end()) {
      joint = jt->second;
    }
  }
  return (static_cast<double>(joint) + alpha_) /
         (static_cast<double>(total) + alpha_ * static_cast<double>(outcome_count()));
}

double NGramModel::score(std::string_view word, std::span<const std::string> left,
                         std::span<const std::string> right) const {
  const auto width = static_cast<std::size_t>(order_ - 1);
  std::vector<std::string> seq;
  for (std::size_t i = left.size(); i < width; ++i) seq.emplace_back(kBos);
  const std::size_t take_left = std::min(width, left.size());
  seq.insert(seq.end(), left.end() - static_cast<std::ptrdiff_t>(take_left), left.end());
  const std::size_t slot = seq.size();
  seq.emplace_back(word);
  const std::size_t take_right = std::min(width, right.size());
  seq.insert(seq.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(take_right));
  if (right.size() < width) seq.emplace_back(kEos);

  double total = 0.0;
  const std::size_t last = std::min(seq.size() - 1, slot + width);
  for (std::size_t p = slot; p <= last; ++p) {
    const auto ctx = std::span<const std::string>(seq).subspan(p - width, width);
    total += std::log(probability(ctx, seq[p]));
  }
  return total;
}

std::uint64_t NGramModel::frequency(std::string_view word) const {
  return count(1, "", word);
}

std::uint64_t NGramModel::count(int order, std::string_view context,
                                std::string_view word) const {
  if (order < 1 || order > order_) return 0;
  const auto& table = tables_[static_cast<std::size_t>(order - 1)];
  auto it = table.find(std::string(context));
  if (it == table.end()) return 0;
  auto jt = it->second.next.find(std::string(word));
  return jt == it->second.next.end() ? 0 : jt->second;
}

std::string NGramModel::serialize() const {
  std::string out = std::string(kLmMagic) + " v1 order=" + std::to_string(order_) +
                    " alpha=" + format_double(alpha_) + "\n";
  for (int m = 1; m <= order_; ++m) {
    std::vector<std::tuple<std::string_view, std::string_view, std::uint64_t>> rows;
    for (const auto& [ctx, counts] : tables_[static_cast<std::size_t>(m - 1)]) {
      for (const auto& [word, n] : counts.next) rows.emplace_back(ctx, word, n);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [ctx, word, n] : rows) {
      out += std::to_string(m);
      out += '\t';
      out += ctx;
      out += '\t';
      out += word;
      out += '\t';
      out += std::to_string(n);
      out += '\n';
    }
  }
  out += "#CHECKSUM\t" + hex16(fnv1a64(out)) + "\n";
  return out;
}

NGramModel NGramModel::deserialize(std::string_view bytes) {
  const auto header_end = bytes.find('\n');
  if (header_end == std::string_view::npos) corrupt("missing header");
  const std::string_view header = bytes.substr(0, header_end);
  if (header.substr(0, kLmMagic.size() + 1) != std::string(kLmMagic) + " ") {
    corrupt("bad magic");
  }
  const std::string_view rest = header.substr(kLmMagic.size() + 1);
  if (rest.substr(0, 3) != "v1 ") {
    throw Error(ErrorCode::kUnsupportedVersion, "unsupported language model version");
  }
  int order = 0;
  double alpha = 0;
  {
    const std::string_view fields = rest.substr(3);
    const auto sp = fields.find(' ');
    if (sp == std::string_view::npos || fields.substr(0, 6) != "order=" ||
        fields.substr(sp + 1, 6) != "alpha=") {
      corrupt("malformed header");
    }
    const auto o = fields.substr(6, sp - 6);
    const auto a = fields.substr(sp + 7);
    auto [p1, e1] = std::from_chars(o.data(), o.data() + o.size(), order);
    auto [p2, e2] = std::from_chars(a.data(), a.data() + a.size(), alpha);
    if (e1 != std::errc{} || p1 != o.data() + o.size() || e2 != std::errc{} ||
        p2 != a.data() + a.size()) {
      corrupt("malformed header");
    }
  }

  std::string_view body = bytes;
  if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
  const auto trailer_start = body.rfind('\n');
  if (trailer_start == std::string_view::npos) corrupt("missing checksum");
  const std::string_view trailer = body.substr(trailer_start + 1);
  if (trailer.substr(0, 10) != "#CHECKSUM\t") corrupt("missing checksum");
  const auto expected = parse_hex16(trailer.substr(10));
  const std::string_view covered = bytes.substr(0, trailer_start + 1);
  if (!expected || *expected != fnv1a64(covered)) corrupt("checksum mismatch");

  NGramModel model(order, alpha);
  std::string_view lines = covered.substr(header_end + 1);
  while (!lines.empty()) {
    const auto nl = lines.find('\n');
    const std::string_view line = lines.substr(0, nl);
    lines.remove_prefix(nl + 1);
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    const auto t3 = line.find('\t', t2 + 1);
    if (t1 == std::string_view::npos || t2 == std::string_view::npos ||
        t3 == std::string_view::npos) {
      corrupt("malformed row");
    }
    int m = 0;
    std::uint64_t n = 0;
    const auto ms = line.substr(0, t1);
    const auto ns = line.substr(t3 + 1);
    auto [pm, em] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
    auto [pn, en] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    if (em != std::errc{} || pm != ms.data() + ms.size() || en != std::errc{} ||
        pn != ns.data() + ns.size() || m < 1 || m > order || n == 0) {
      corrupt("malformed row");
    }
    const std::string context(line.substr(t1 + 1, t2 - t1 - 1));
    const auto words_in_context =
        context.empty() ? 0 : std::count(context.begin(), context.end(), ' ') + 1;
    if (words_in_context != m - 1) corrupt("context width does not match order");
    model.add_count(m, context, std::string(line.substr(t2 + 1, t3 - t2 - 1)), n);
  }
  return model;
}

void NGramModel::save(const std::filesystem::path& path) const {
  detail::write_atomically(path, serialize());
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  return deserialize(detail::read_file(path));
}

bool operator==(const NGramModel& a, const NGramModel& b) {
  return a.order_ == b.order_ && a.alpha_ == b.alpha_ && a.tables_ == b.tables_ &&
         a.vocabulary_ == b.vocabulary_;
}

std::vector<std::string> model_tokens(std::string_view text, const EncoderConfig& encoder) {
  std::vector<std::string> out;
  for (const TokenSpan& span : tokenize(text, encoder)) {
    if (span.is_word) out.push_back(canonicalize(span.raw, encoder));
  }
  return out;
}

NGramModel train_ngram(std::span<const Document> corpus, int order, double alpha,
                       const EncoderConfig& encoder) {
  NGramModel model(order, alpha);
  bool any = false;
  for (const Document& doc : corpus) {
    const auto tokens = model_tokens(doc.text, encoder);
    if (tokens.empty()) continue;
    model.add_sentence(tokens);
    any = true;
  }
  if (!any) throw Error(ErrorCode::kEmptyCorpus, "training corpus has no word tokens");
  return model;
}

double coherency(const CoherencyScorer& scorer, std::string_view word,
                 std::span<const std::string> left, std::span<const std::string> right) {
  return scorer.score(word, left, right);
}

}  // namespace cryptext
