#include "thetarich/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "thetarich/palindromic.hpp"

namespace thetarich {

namespace {

class PeriodicGenerator final : public WordGenerator {
public:
    explicit PeriodicGenerator(Word v) : v_(std::move(v)) {
        if (v_.is_empty()) throw std::invalid_argument("periodic_word: empty period");
    }
    const Alphabet& alphabet() const override { return v_.alphabet(); }
    Word prefix(std::size_t n) const override {
        std::vector<Letter> letters;
        letters.reserve(n);
        for (std::size_t i = 0; i < n; ++i) letters.push_back(v_[i % v_.size()]);
        return Word(v_.alphabet(), std::move(letters));
    }

private:
    Word v_;
};

class SturmianGenerator final : public WordGenerator {
public:
    SturmianGenerator(std::vector<unsigned> directive, std::size_t depth)
        : alphabet_(Alphabet({"0", "1"})), directive_(std::move(directive)), depth_(depth) {
        if (directive_.empty())
            throw std::invalid_argument("sturmian_standard: empty directive");
        for (unsigned d : directive_)
            if (d == 0) throw std::invalid_argument("sturmian_standard: directive entries must be positive");
    }
    const Alphabet& alphabet() const override { return alphabet_; }
    Word prefix(std::size_t n) const override {
        // s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2}
        std::vector<Letter> prev = {1};
        std::vector<Letter> cur = {0};
        std::size_t steps = 0;
        while (cur.size() < n) {
            if (++steps > depth_)
                throw std::length_error("sturmian_standard: depth budget exhausted");
            const unsigned d = directive_[(steps - 1) % directive_.size()];
            std::vector<Letter> next;
            next.reserve(cur.size() * d + prev.size());
            for (unsigned i = 0; i < d; ++i) next.insert(next.end(), cur.begin(), cur.end());
            next.insert(next.end(), prev.begin(), prev.end());
            prev = std::move(cur);
            cur = std::move(next);
        }
        cur.resize(n);
        return Word(alphabet_, std::move(cur));
    }

private:
    Alphabet alphabet_;
    std::vector<unsigned> directive_;
    std::size_t depth_;
};

class MorphicGenerator final : public WordGenerator {
public:
    MorphicGenerator(Morphism m, std::shared_ptr<const WordGenerator> base)
        : m_(std::move(m)), base_(std::move(base)) {
        if (!m_.source_alphabet().compatible_with(base_->alphabet()))
            throw std::invalid_argument("morphic_image: base alphabet does not match morphism source");
    }
    const Alphabet& alphabet() const override { return m_.target_alphabet(); }
    Word prefix(std::size_t n) const override {
        // non-erasing: n base letters map to at least n output letters
        Word base = base_->prefix(n);
        std::vector<Letter> out;
        out.reserve(n);
        for (std::size_t i = 0; i < base.size() && out.size() < n; ++i) {
            const Word& img = m_.image(base[i]);
            for (std::size_t j = 0; j < img.size(); ++j) out.push_back(img[j]);
        }
        if (out.size() < n) throw std::length_error("morphic_image: base exhausted");
        out.resize(n);
        return Word(m_.target_alphabet(), std::move(out));
    }

private:
    Morphism m_;
    std::shared_ptr<const WordGenerator> base_;
};

class ThetaStandardGenerator final : public WordGenerator {
public:
    ThetaStandardGenerator(Antimorphism theta, Word seed, Word directive, std::size_t budget)
        : theta_(std::move(theta)), seed_(std::move(seed)), directive_(std::move(directive)),
          budget_(budget) {
        if (!theta_.alphabet().compatible_with(seed_.alphabet()) ||
            !theta_.alphabet().compatible_with(directive_.alphabet()))
            throw std::invalid_argument("theta_standard_with_seed: alphabet mismatch");
        if (directive_.is_empty())
            throw std::invalid_argument("theta_standard_with_seed: empty directive");
    }
    const Alphabet& alphabet() const override { return theta_.alphabet(); }
    Word prefix(std::size_t n) const override {
        Word u = seed_;
        std::size_t steps = 0;
        while (u.size() < n) {
            if (++steps > budget_)
                throw std::length_error("theta_standard_with_seed: step budget exhausted");
            u = theta_palindromic_closure(theta_, u.appended(directive_[(steps - 1) % directive_.size()]));
        }
        return u.prefix(n);
    }

private:
    Antimorphism theta_;
    Word seed_;
    Word directive_;
    std::size_t budget_;
};

}  // namespace

std::unique_ptr<WordGenerator> periodic_word(Word v) {
    return std::make_unique<PeriodicGenerator>(std::move(v));
}

std::unique_ptr<WordGenerator> sturmian_standard(std::vector<unsigned> directive,
                                                 std::size_t depth) {
    return std::make_unique<SturmianGenerator>(std::move(directive), depth);
}

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
        throw std::invalid_argument("Morphism: need exactly one image per source letter");
    for (const Word& img : images_) {
        if (img.is_empty()) throw std::invalid_argument("Morphism: erasing images not allowed");
        if (!img.alphabet().compatible_with(target_))
            throw std::invalid_argument("Morphism: image over wrong alphabet");
    }
}

Word Morphism::apply(const Word& w) const {
    if (!w.alphabet().compatible_with(source_))
        throw std::invalid_argument("Morphism: word over wrong alphabet");
    std::vector<Letter> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Word& img = image(w[i]);
        for (std::size_t j = 0; j < img.size(); ++j) out.push_back(img[j]);
    }
    return Word(target_, std::move(out));
}

std::unique_ptr<WordGenerator> morphic_image(Morphism m,
                                             std::shared_ptr<const WordGenerator> base) {
    return std::make_unique<MorphicGenerator>(std::move(m), std::move(base));
}

std::unique_ptr<WordGenerator> theta_standard_with_seed(Antimorphism theta, Word seed,
                                                        Word directive,
                                                        std::size_t step_budget) {
    return std::make_unique<ThetaStandardGenerator>(std::move(theta), std::move(seed),
                                                    std::move(directive), step_budget);
}

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;

    Alphabet bin({"0", "1"});
    Antimorphism rev = Antimorphism::reversal(bin);
    std::shared_ptr<const WordGenerator> fib = sturmian_standard({1});
    out.push_back({"fibonacci", "Fibonacci word, plain reversal", rev, fib, false});

    Alphabet aac({"a", "a'", "c"});
    Antimorphism theta = Antimorphism::from_cycles(aac, {{0, 1}, {2, 2}});
    auto img = [&](const char* img0, const char* img1) {
        return Morphism(bin, aac, {aac.parse(img0), aac.parse(img1)});
    };

    out.push_back({"ex5.1", "image of the Fibonacci word under 0->aa', 1->aa'c",
                   theta, morphic_image(img("aa'", "aa'c"), fib), false});
    out.push_back({"ex5.2", "image of the Fibonacci word under 0->a'cacc, 1->a'cac",
                   theta, morphic_image(img("a'cacc", "a'cac"), fib), false});
    out.push_back({"ex5.3", "image of the Fibonacci word under 0->aa', 1->acca'",
                   theta, morphic_image(img("aa'", "acca'"), fib), false});
    out.push_back({"ex5.4", "periodic repetition of caca'",
                   theta, periodic_word(aac.parse("caca'")), true});
    out.push_back({"ex5.5", "periodic repetition of ccaa'",
                   theta, periodic_word(aac.parse("ccaa'")), true});
    return out;
}

CorpusEntry corpus_entry(const std::string& name) {
    for (CorpusEntry& e : builtin_corpus())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown corpus word: " + name);
}

}  // namespace thetarich
