#include "ncwb/matrix.h"

namespace ncwb::matrix {

void axpy(Vec &v, const CycloScalar &c, const Vec &w)
{
	if (c.is_zero())
		return;
	for (size_t i = 0; i < v.size(); ++i)
		if (!w[i].is_zero())
			v[i] += c * w[i];
}

bool is_zero(const Vec &v)
{
	for (const auto &c : v)
		if (!c.is_zero())
			return false;
	return true;
}

bool RowSpace::add(Vec row)
{
	if (row.size() != cols_)
		throw Error("row length mismatch: got " + std::to_string(row.size()) + ", want " +
		            std::to_string(cols_));
	size_t src = inserted_++;
	Vec combo;
	if (track_) {
		combo.assign(src + 1, CycloScalar());
		combo[src] = CycloScalar(1);
		for (auto &c : combos_)
			c.resize(src + 1, CycloScalar());
	}
	// forward reduction against existing pivots
	for (size_t col = 0; col < cols_; ++col) {
		if (row[col].is_zero())
			continue;
		auto it = pivots_.find(col);
		if (it == pivots_.end()) {
			// new pivot: normalize, clear the tail against pivots to the
			// right, then back-substitute out of existing rows
			CycloScalar inv = row[col].inv();
			for (auto &x : row)
				x *= inv;
			if (track_)
				for (auto &x : combo)
					x *= inv;
			for (auto pit = pivots_.upper_bound(col); pit != pivots_.end();
			     ++pit) {
				CycloScalar c = row[pit->first];
				if (c.is_zero())
					continue;
				axpy(row, -c, rows_[pit->second]);
				if (track_)
					axpy(combo, -c, combos_[pit->second]);
			}
			size_t idx = rows_.size();
			for (size_t j = 0; j < rows_.size(); ++j) {
				CycloScalar c = rows_[j][col];
				if (c.is_zero())
					continue;
				axpy(rows_[j], -c, row);
				if (track_)
					axpy(combos_[j], -c, combo);
			}
			rows_.push_back(std::move(row));
			if (track_)
				combos_.push_back(std::move(combo));
			pivots_[col] = idx;
			return true;
		}
		CycloScalar c = row[col];
		axpy(row, -c, rows_[it->second]);
		if (track_)
			axpy(combo, -c, combos_[it->second]);
	}
	return false;
}

const Vec &RowSpace::combo(size_t i) const
{
	if (!track_)
		throw Error("row space built without coefficient tracking");
	return combos_[i];
}

Vec RowSpace::reduce(Vec v) const
{
	for (const auto &[col, idx] : pivots_) {
		if (v[col].is_zero())
			continue;
		CycloScalar c = v[col];
		axpy(v, -c, rows_[idx]);
	}
	return v;
}

bool RowSpace::contains(const Vec &v) const { return is_zero(reduce(v)); }

std::optional<Vec> RowSpace::express(const Vec &v) const
{
	if (!track_)
		throw Error("row space built without coefficient tracking");
	Vec w = v;
	Vec coeff(inserted_, CycloScalar());
	for (const auto &[col, idx] : pivots_) {
		if (w[col].is_zero())
			continue;
		CycloScalar c = w[col];
		axpy(w, -c, rows_[idx]);
		const Vec &cb = combos_[idx];
		for (size_t j = 0; j < cb.size(); ++j)
			if (!cb[j].is_zero())
				coeff[j] += c * cb[j];
	}
	if (!is_zero(w))
		return std::nullopt;
	return coeff;
}

std::optional<Vec> solve(const std::vector<Vec> &a, const Vec &b)
{
	// eliminate on the transpose-augmented system: rows are equations
	size_t n = a.size();
	if (n == 0)
		return is_zero(b) ? std::optional<Vec>(Vec{}) : std::nullopt;
	size_t m = a[0].size();
	if (b.size() != m)
		throw Error("solve: rhs length mismatch");
	// equations indexed by coordinate j: sum_i a[i][j] x_i = b[j]
	RowSpace sp(n + 1, false);
	std::vector<Vec> eqs;
	for (size_t j = 0; j < m; ++j) {
		Vec eq(n + 1, CycloScalar());
		for (size_t i = 0; i < n; ++i)
			eq[i] = a[i][j];
		eq[n] = b[j];
		sp.add(std::move(eq));
	}
	// inconsistent iff a pivot lands in the rhs column
	if (sp.pivots().count(n))
		return std::nullopt;
	Vec x(n, CycloScalar());
	for (const auto &[col, idx] : sp.pivots())
		x[col] = sp.rows()[idx][n];
	return x;
}

std::vector<Vec> nullspace(const std::vector<Vec> &constraints, size_t ncols)
{
	RowSpace sp(ncols, false);
	for (const auto &r : constraints)
		sp.add(r);
	std::vector<Vec> basis;
	for (size_t c = 0; c < ncols; ++c) {
		if (sp.pivots().count(c))
			continue;
		Vec v(ncols, CycloScalar());
		v[c] = CycloScalar(1);
		for (const auto &[col, idx] : sp.pivots())
			v[col] = -sp.rows()[idx][c];
		basis.push_back(std::move(v));
	}
	return basis;
}

} // namespace ncwb::matrix
