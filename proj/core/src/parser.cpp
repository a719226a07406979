#include "ncwb/parser.h"
#include <cctype>

namespace ncwb::parser {

namespace {

struct Lexer {
	const std::string &s;
	size_t pos = 0;
	int line = 1, col = 1;

	void advance()
	{
		if (s[pos] == '\n') {
			++line;
			col = 1;
		} else {
			++col;
		}
		++pos;
	}
	void skip()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			advance();
	}
	char peek()
	{
		skip();
		return pos < s.size() ? s[pos] : '\0';
	}
	bool eat(char c)
	{
		if (peek() == c) {
			advance();
			return true;
		}
		return false;
	}
	[[noreturn]] void fail(const std::string &why)
	{
		throw Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
		            ": " + why);
	}
	mpz_class natural()
	{
		skip();
		size_t start = pos;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
			advance();
		if (pos == start)
			fail("expected number");
		return mpz_class(s.substr(start, pos - start));
	}
	std::string ident()
	{
		skip();
		size_t start = pos;
		if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
			advance();
		while (pos < s.size() &&
		       (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
			advance();
		return s.substr(start, pos - start);
	}
};

struct Parser {
	Lexer lx;
	std::shared_ptr<const Gens> gens;
	const scalar::CycloField *field;
	const std::map<std::string, CycloScalar> &params;

	FreePoly expr()
	{
		bool neg = false;
		if (lx.eat('-'))
			neg = true;
		else
			lx.eat('+');
		FreePoly acc = term();
		if (neg)
			acc = -acc;
		while (true) {
			if (lx.eat('+'))
				acc += term();
			else if (lx.eat('-'))
				acc -= term();
			else
				break;
		}
		return acc;
	}

	FreePoly term()
	{
		FreePoly acc = factor();
		while (lx.eat('*'))
			acc = acc * factor();
		return acc;
	}

	FreePoly factor()
	{
		FreePoly base = primary();
		if (lx.eat('^')) {
			mpz_class e = lx.natural();
			if (e < 0 || e > 1000)
				lx.fail("exponent out of range");
			FreePoly acc = FreePoly::constant(gens, CycloScalar(1));
			for (long i = 0; i < e.get_si(); ++i)
				acc = acc * base;
			return acc;
		}
		return base;
	}

	FreePoly primary()
	{
		char c = lx.peek();
		if (c == '(') {
			lx.advance();
			FreePoly inner = expr();
			if (!lx.eat(')'))
				lx.fail("expected )");
			return inner;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			mpz_class num = lx.natural();
			if (lx.eat('/')) {
				mpz_class den = lx.natural();
				if (den == 0)
					lx.fail("zero denominator");
				mpq_class q(num, den);
				q.canonicalize();
				return FreePoly::constant(gens, CycloScalar(q));
			}
			return FreePoly::constant(gens, CycloScalar(mpq_class(num)));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			int eline = lx.line, ecol = lx.col;
			std::string name = lx.ident();
			if (gens) {
				int gi = gens->index(name);
				if (gi >= 0)
					return FreePoly::generator(gens, gi);
			}
			auto it = params.find(name);
			if (it != params.end())
				return FreePoly::constant(gens, it->second);
			if (name == "z")
				return FreePoly::constant(gens, CycloScalar::zeta(field));
			if (name == "zeta") {
				if (!lx.eat('('))
					lx.fail("expected ( after zeta");
				mpz_class k = lx.natural();
				if (!lx.eat(')'))
					lx.fail("expected )");
				return FreePoly::constant(
				    gens, CycloScalar::root_of_unity(field, k.get_si()));
			}
			throw Error("parse error at " + std::to_string(eline) + ":" +
			            std::to_string(ecol) + ": unknown generator name: " + name);
		}
		lx.fail("unexpected character");
	}
};

} // namespace

FreePoly parse_poly(const std::string &text, std::shared_ptr<const Gens> gens,
                    const CycloField *field, const std::map<std::string, CycloScalar> &params)
{
	Parser p{Lexer{text}, std::move(gens), field, params};
	FreePoly r = p.expr();
	p.lx.skip();
	if (p.lx.pos != text.size())
		p.lx.fail("trailing input");
	return r;
}

CycloScalar parse_scalar_expr(const std::string &text, const CycloField *field,
                              const std::map<std::string, CycloScalar> &params)
{
	FreePoly p = parse_poly(text, nullptr, field, params);
	for (const auto &[w, c] : p.terms())
		if (!w.empty())
			throw Error("expected a scalar expression: " + text);
	return p.is_zero() ? CycloScalar(field) : p.terms().begin()->second;
}

} // namespace ncwb::parser
