#include "torcoh/sparse_matrix.hpp"

#include <sstream>

namespace torcoh {

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : nrows_(rows), ncols_(cols) {
  if (rows < 0 || cols < 0) fail(Errc::bad_argument, "negative matrix shape");
  rows_.resize(static_cast<std::size_t>(rows));
}

void SparseIntMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_)
    fail(Errc::bad_argument, "matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") outside " + std::to_string(nrows_) + "x" +
                                 std::to_string(ncols_));
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Int SparseIntMatrix::get(int r, int c) const {
  check_index(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Int(0) : it->second;
}

void SparseIntMatrix::set(int r, int c, const Int& v) {
  check_index(r, c);
  if (v == 0)
    rows_[r].erase(c);
  else
    rows_[r][c] = v;
}

void SparseIntMatrix::add_to(int r, int c, const Int& v) {
  check_index(r, c);
  if (v == 0) return;
  auto [it, fresh] = rows_[r].try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) rows_[r].erase(it);
  }
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(ncols_, nrows_);
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  return t;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& o) const {
  if (ncols_ != o.nrows_)
    fail(Errc::bad_argument, "matrix product shape mismatch: " + std::to_string(ncols_) +
                                 " vs " + std::to_string(o.nrows_));
  SparseIntMatrix p(nrows_, o.ncols_);
  Int tmp;
  for (int r = 0; r < nrows_; ++r) {
    auto& out = p.rows_[r];
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, b] : o.rows_[k]) {
        tmp = a * b;
        auto [it, fresh] = out.try_emplace(c, tmp);
        if (!fresh) {
          it->second += tmp;
          if (it->second == 0) out.erase(it);
        }
      }
  }
  return p;
}

SparseIntMatrix SparseIntMatrix::operator+(const SparseIntMatrix& o) const {
  if (nrows_ != o.nrows_ || ncols_ != o.ncols_) fail(Errc::bad_argument, "matrix sum shape mismatch");
  SparseIntMatrix s = *this;
  for (int r = 0; r < o.nrows_; ++r)
    for (const auto& [c, v] : o.rows_[r]) s.add_to(r, c, v);
  return s;
}

SparseIntMatrix SparseIntMatrix::scaled(const Int& s) const {
  SparseIntMatrix out(nrows_, ncols_);
  if (s == 0) return out;
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : rows_[r]) out.rows_[r].emplace(c, v * s);
  return out;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
  return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

void SparseIntMatrix::add_block(int r0, int c0, const SparseIntMatrix& b, const Int& s) {
  if (r0 < 0 || c0 < 0 || r0 + b.nrows_ > nrows_ || c0 + b.ncols_ > ncols_)
    fail(Errc::bad_argument, "block placement outside matrix");
  if (s == 0) return;
  for (int r = 0; r < b.nrows_; ++r)
    for (const auto& [c, v] : b.rows_[r]) add_to(r0 + r, c0 + c, v * s);
}

SparseIntMatrix SparseIntMatrix::submatrix_rows(const std::vector<int>& which) const {
  SparseIntMatrix out(static_cast<int>(which.size()), ncols_);
  for (std::size_t i = 0; i < which.size(); ++i) {
    int r = which[i];
    if (r < 0 || r >= nrows_) fail(Errc::bad_argument, "row selection outside matrix");
    out.rows_[i] = rows_[r];
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[i].emplace(i, 1);
  return m;
}

std::string SparseIntMatrix::to_exchange_text() const {
  std::ostringstream os;
  os << nrows_ << ' ' << ncols_ << ' ' << nnz() << '\n';
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [c, v] : rows_[r]) os << r << ' ' << c << ' ' << v.get_str() << '\n';
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse, "matrix text, line " + std::to_string(line) + ": " + what);
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_exchange_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  long rows = -1, cols = -1, declared = -1;
  long seen = 0;
  SparseIntMatrix m;
  long prev_r = -1, prev_c = -1;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a)) continue;  // blank
    if (!(ls >> b >> c)) parse_fail(lineno, "expected three whitespace-separated fields");
    std::string extra;
    if (ls >> extra) parse_fail(lineno, "trailing field '" + extra + "'");
    if (rows < 0) {
      try {
        rows = std::stol(a);
        cols = std::stol(b);
        declared = std::stol(c);
      } catch (const std::exception&) {
        parse_fail(lineno, "bad header, want '<rows> <cols> <nnz>'");
      }
      if (rows < 0 || cols < 0 || declared < 0) parse_fail(lineno, "negative header field");
      m = SparseIntMatrix(static_cast<int>(rows), static_cast<int>(cols));
      continue;
    }
    long r, cc;
    try {
      r = std::stol(a);
      cc = std::stol(b);
    } catch (const std::exception&) {
      parse_fail(lineno, "bad entry indices");
    }
    if (r < 0 || r >= rows || cc < 0 || cc >= cols)
      parse_fail(lineno, "entry (" + a + "," + b + ") outside declared shape");
    if (r < prev_r || (r == prev_r && cc <= prev_c))
      parse_fail(lineno, "entries must be strictly sorted by (row, col)");
    Int v;
    try {
      v = parse_int(c);
    } catch (const Error&) {
      parse_fail(lineno, "bad entry value '" + c + "'");
    }
    if (v == 0) parse_fail(lineno, "explicit zero entry is not allowed");
    m.rows_[static_cast<int>(r)].emplace(static_cast<int>(cc), v);
    prev_r = r;
    prev_c = cc;
    ++seen;
  }
  if (rows < 0) fail(Errc::parse, "matrix text: missing header line");
  if (seen != declared)
    fail(Errc::parse, "matrix text: header declares " + std::to_string(declared) +
                          " entries but " + std::to_string(seen) + " present");
  return m;
}

}  // namespace torcoh
