#include "sloane/radix.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

namespace sloane::radix {
namespace {

struct ChunkBase {
  std::uint64_t big;    // b^k
  unsigned k;           // digits per chunk
  std::uint64_t magic;  // floor(2^64 / b) + 1
};

ChunkBase chunk_base(std::uint32_t b) {
  ChunkBase c{b, 1, std::numeric_limits<std::uint64_t>::max() / b + 1};
  while (c.big <= std::numeric_limits<std::uint64_t>::max() / b) {
    c.big *= b;
    ++c.k;
  }
  return c;
}

// floor(x / b) for x < 2^64 / b. With magic = 2^64/b + e, 0 < e <= 1, the
// product overshoots x/b by x*e/2^64 < 1/b, which never crosses the next
// integer.
__extension__ typedef unsigned __int128 u128;

inline std::uint64_t div_small(std::uint64_t x, std::uint64_t magic) {
  return static_cast<std::uint64_t>((static_cast<u128>(x) * magic) >> 64);
}

void set_u64(mpz_t z, std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpz_set_ui(z, static_cast<unsigned long>(v));
}

// Powers D_j = big^(2^j) for one base with their Barrett reciprocals
// floor(4^n / D_j), n = bits(D_j), grown on demand and reused across calls
// on the same thread.
class PowerTable {
 public:
  struct Entry {
    mpz_class power;
    mpz_class inverse;
    mp_bitcnt_t bits = 0;
  };

  explicit PowerTable(const ChunkBase& c) {
    mpz_class p;
    set_u64(p.get_mpz_t(), c.big);
    push(std::move(p));
  }

  const Entry& entry(std::size_t j) {
    while (entries_.size() <= j) {
      mpz_class next;
      mpz_mul(next.get_mpz_t(), entries_.back().power.get_mpz_t(),
              entries_.back().power.get_mpz_t());
      push(std::move(next));
    }
    return entries_[j];
  }

  const mpz_class& at(std::size_t j) { return entry(j).power; }

 private:
  void push(mpz_class p) {
    Entry e;
    e.bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    mpz_setbit(e.inverse.get_mpz_t(), 2 * e.bits);
    mpz_tdiv_q(e.inverse.get_mpz_t(), e.inverse.get_mpz_t(), p.get_mpz_t());
    e.power = std::move(p);
    entries_.push_back(std::move(e));
  }

  std::vector<Entry> entries_;
};

PowerTable& power_table(std::uint32_t b, const ChunkBase& c) {
  thread_local std::unordered_map<std::uint32_t, PowerTable> tables;
  auto it = tables.find(b);
  if (it == tables.end()) it = tables.emplace(b, PowerTable(c)).first;
  return it->second;
}

// Writes the k digits of one chunk, zero padded.
inline void write_chunk(std::uint64_t v, std::uint32_t b, const ChunkBase& c, std::uint32_t* out) {
  // One hardware division brings v below 2^64 / b, where div_small is exact.
  std::uint64_t q = v / b;
  out[0] = static_cast<std::uint32_t>(v - q * b);
  v = q;
  for (unsigned i = 1; i < c.k; ++i) {
    q = div_small(v, c.magic);
    out[i] = static_cast<std::uint32_t>(v - q * b);
    v = q;
  }
}

// Destroys `x`. Writes ceil(digits/k)*k digits at most.
void schoolbook_into(mpz_t x, std::uint32_t b, const ChunkBase& c, std::uint32_t* out) {
  while (mpz_sgn(x) != 0) {
    const std::uint64_t r = mpz_tdiv_q_ui(x, x, static_cast<unsigned long>(c.big));
    write_chunk(r, b, c, out);
    out += c.k;
  }
}

// q = floor(x / D), x = x mod D for x < D^2. The estimate
// ((x >> (n-1)) * inverse) >> (n+1) falls short of q by at most 2.
void barrett_qr(mpz_t q, mpz_t x, const PowerTable::Entry& e, mpz_t tmp) {
  mpz_tdiv_q_2exp(tmp, x, e.bits - 1);
  mpz_mul(q, tmp, e.inverse.get_mpz_t());
  mpz_tdiv_q_2exp(q, q, e.bits + 1);
  mpz_mul(tmp, q, e.power.get_mpz_t());
  mpz_sub(x, x, tmp);
  while (mpz_cmp(x, e.power.get_mpz_t()) >= 0) {
    mpz_sub(x, x, e.power.get_mpz_t());
    mpz_add_ui(q, q, 1);
  }
}

// Precondition: x < table.at(level + 1). Output region holds k * 2^(level+1)
// digits and is pre-zeroed.
void dc_into(mpz_t x, int level, std::uint32_t b, const ChunkBase& c, PowerTable& table,
             std::uint32_t* out) {
  mpz_class q, tmp;
  while (level >= 0 && mpz_size(x) > kDivideAndConquerLimbs) {
    const PowerTable::Entry& e = table.entry(static_cast<std::size_t>(level));
    if (mpz_cmp(x, e.power.get_mpz_t()) < 0) {
      --level;
      continue;
    }
    barrett_qr(q.get_mpz_t(), x, e, tmp.get_mpz_t());
    dc_into(x, level - 1, b, c, table, out);
    mpz_swap(x, q.get_mpz_t());
    out += static_cast<std::size_t>(c.k) << level;
    --level;
  }
  schoolbook_into(x, b, c, out);
}

void trim(std::vector<std::uint32_t>& digits) {
  while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
  if (digits.empty()) digits.push_back(0);
}

}  // namespace

std::vector<std::uint32_t> to_digits_schoolbook(const mpz_class& x, std::uint32_t b) {
  const ChunkBase c = chunk_base(b);
  // mpz_sizeinbase only takes bases up to 62; b >= 2^floor(log2 b) bounds
  // the digit count by the bit length instead.
  const std::size_t bits_per_digit = static_cast<std::size_t>(std::bit_width(b) - 1);
  const std::size_t bound = mpz_sizeinbase(x.get_mpz_t(), 2) / bits_per_digit + 1 + c.k;
  std::vector<std::uint32_t> out(bound, 0);
  mpz_class work = x;
  schoolbook_into(work.get_mpz_t(), b, c, out.data());
  trim(out);
  return out;
}

std::vector<std::uint32_t> to_digits(const mpz_class& x, std::uint32_t b) {
  if (mpz_size(x.get_mpz_t()) <= kDivideAndConquerLimbs) return to_digits_schoolbook(x, b);

  const ChunkBase c = chunk_base(b);
  PowerTable& table = power_table(b, c);
  std::size_t top = 0;
  while (mpz_cmp(x.get_mpz_t(), table.at(top).get_mpz_t()) >= 0) ++top;
  // x < big^(2^top); top >= 1 because x has more than one limb.
  std::vector<std::uint32_t> out((static_cast<std::size_t>(c.k) << top) + c.k, 0);
  mpz_class work = x;
  dc_into(work.get_mpz_t(), static_cast<int>(top) - 1, b, c, table, out.data());
  trim(out);
  return out;
}

mpz_class from_digits_horner(std::span<const std::uint32_t> digits, std::uint32_t b) {
  const ChunkBase c = chunk_base(b);
  mpz_class acc;
  std::size_t i = digits.size();
  // Most-significant partial chunk first, then whole chunks.
  while (i > 0) {
    const std::size_t take = (i % c.k) ? (i % c.k) : c.k;
    std::uint64_t chunk = 0, scale = 1;
    for (std::size_t j = i; j > i - take; --j) {
      chunk = chunk * b + digits[j - 1];
      scale *= b;
    }
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(scale));
    mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(chunk));
    i -= take;
  }
  return acc;
}

namespace {

// Value of the chunk sequence, chunk i weighted by big^i.
mpz_class combine(std::span<const std::uint64_t> chunks, std::uint64_t big, PowerTable& table) {
  const std::size_t n = chunks.size();
  if (n <= kHornerChunks) {
    mpz_class acc;
    for (std::size_t i = n; i > 0; --i) {
      mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(big));
      mpz_add_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(chunks[i - 1]));
    }
    return acc;
  }
  std::size_t level = 0;
  while ((std::size_t{2} << level) < n) ++level;
  const std::size_t split = std::size_t{1} << level;
  mpz_class low = combine(chunks.first(split), big, table);
  mpz_class high = combine(chunks.subspan(split), big, table);
  mpz_mul(high.get_mpz_t(), high.get_mpz_t(), table.at(level).get_mpz_t());
  high += low;
  return high;
}

}  // namespace

mpz_class from_digits(std::span<const std::uint32_t> digits, std::uint32_t b) {
  const ChunkBase c = chunk_base(b);
  const std::size_t nchunks = (digits.size() + c.k - 1) / c.k;
  if (nchunks <= kHornerChunks) return from_digits_horner(digits, b);

  std::vector<std::uint64_t> chunks(nchunks, 0);
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    const std::size_t lo = ci * c.k;
    const std::size_t hi = std::min(digits.size(), lo + c.k);
    std::uint64_t v = 0;
    for (std::size_t j = hi; j > lo; --j) v = v * b + digits[j - 1];
    chunks[ci] = v;
  }
  return combine(chunks, c.big, power_table(b, c));
}

}  // namespace sloane::radix
