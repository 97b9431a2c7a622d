#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mdfs/classifiers.hpp"
#include "mdfs/metrics.hpp"
#include "mdfs/siren.hpp"

using namespace mdfs;

namespace {

Dataset gaussian_pair(double gap, std::size_t per_class, std::uint64_t seed,
                      std::size_t features = 1) {
    SirenSpec spec;
    spec.class_sizes = {per_class, per_class};
    spec.pair_gaps = Matrix(2, 2, gap);
    spec.groups = {{0, 1, features, GapPlacement::split}};
    spec.seed = seed;
    return generate_siren_dataset(spec).dataset;
}

}  // namespace

TEST_CASE("nb_train") {
    SECTION("recovers class means on a separated pair") {
        const Dataset ds = gaussian_pair(2.0, 250, 1);
        const std::vector<std::size_t> subset{0};
        const auto model = nb_train(ds, subset);
        CHECK(model.means[0][0] == Catch::Approx(-1.0).margin(0.2));
        CHECK(model.means[1][0] == Catch::Approx(1.0).margin(0.2));
        CHECK(model.variances[0][0] == Catch::Approx(1.0).margin(0.3));
        const double p0 = std::exp(model.log_priors[0]);
        const double p1 = std::exp(model.log_priors[1]);
        CHECK(p0 + p1 == Catch::Approx(1.0).margin(1e-12));
    }

    SECTION("constant feature hits the variance floor, no blowup") {
        Dataset ds;
        ds.values = Matrix(6, 1, 2.5);
        ds.labels = {0, 0, 0, 1, 1, 1};
        ds.feature_names = {"f0"};
        ds.label_names = {"0", "1"};
        ds.class_count = 2;
        ds.validate();
        const std::vector<std::size_t> subset{0};
        const auto model = nb_train(ds, subset);
        CHECK(model.variances[0][0] >= 1e-12);
        const auto scores = nb_score(model, ds);
        for (std::size_t i = 0; i < ds.n(); ++i) {
            CHECK(std::isfinite(scores(i, 0)));
            CHECK(scores(i, 0) == Catch::Approx(0.5).margin(1e-9));
        }
    }

    SECTION("empty subset rejected") {
        const Dataset ds = gaussian_pair(1.0, 10, 2);
        CHECK_THROWS(nb_train(ds, std::vector<std::size_t>{}));
    }
}

TEST_CASE("nb_score") {
    SECTION("equidistant point between symmetric classes scores one half each") {
        Dataset train;
        train.values = Matrix(8, 1);
        const double vals[8] = {-2, -1.5, -1, -0.5, 0.5, 1, 1.5, 2};
        for (std::size_t i = 0; i < 8; ++i) {
            train.values(i, 0) = vals[i];
            train.labels.push_back(i < 4 ? 0 : 1);
        }
        train.feature_names = {"f0"};
        train.label_names = {"0", "1"};
        train.class_count = 2;
        train.validate();
        const std::vector<std::size_t> subset{0};
        const auto model = nb_train(train, subset);

        Dataset test = train;
        test.values(0, 0) = 0.0;  // exactly between the mirrored class means
        const auto scores = nb_score(model, test);
        CHECK(scores(0, 0) == Catch::Approx(0.5).margin(1e-9));
        CHECK(scores(0, 1) == Catch::Approx(0.5).margin(1e-9));
    }

    SECTION("rows are probability distributions and deep points classify home") {
        const Dataset ds = gaussian_pair(6.0, 100, 7, 2);
        const std::vector<std::size_t> subset{0, 1};
        const auto model = nb_train(ds, subset);
        const auto scores = nb_score(model, ds);
        std::size_t correct = 0;
        for (std::size_t i = 0; i < ds.n(); ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(scores(i, k) >= 0.0);
                sum += scores(i, k);
            }
            CHECK(sum == Catch::Approx(1.0).margin(1e-9));
            correct += (scores(i, 0) > scores(i, 1)) == (ds.labels[i] == 0);
        }
        CHECK(correct > ds.n() * 95 / 100);  // 6 sigma apart: nearly all classified home
    }

    SECTION("training-set MAUC on a wide pair approaches the ideal") {
        // gap 4 means an irreducible pair AUC around 0.998
        const Dataset ds = gaussian_pair(4.0, 200, 3);
        const std::vector<std::size_t> subset{0};
        const auto scores = nb_score(nb_train(ds, subset), ds);
        CHECK(mauc_of_scores(scores, ds.labels) >= 0.95);
    }
}

TEST_CASE("knn_score") {
    Dataset train;
    train.values = Matrix(4, 2);
    const double pts[4][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 2}};
    for (std::size_t i = 0; i < 4; ++i) {
        train.values(i, 0) = pts[i][0];
        train.values(i, 1) = pts[i][1];
    }
    train.labels = {0, 1, 1, 2};
    train.feature_names = {"f0", "f1"};
    train.label_names = {"0", "1", "2"};
    train.class_count = 3;
    train.validate();
    const std::vector<std::size_t> subset{0, 1};

    SECTION("test point identical to a training point is one-hot at k=1") {
        Dataset test = train;
        const auto scores = knn_score(train, subset, test, 1);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(scores(i, static_cast<std::size_t>(train.labels[i])) == 1.0);
        }
    }

    SECTION("k = n gives the class prior in every row") {
        const auto scores = knn_score(train, subset, train, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(scores(i, 0) == 0.25);
            CHECK(scores(i, 1) == 0.5);
            CHECK(scores(i, 2) == 0.25);
        }
    }

    SECTION("distance tie resolved by the lower training index") {
        // probe (1.5, 1.0) is equidistant from training points 1 = (1,0) and
        // 3 = (2,2): squared distance 1.25 to both
        Dataset test;
        test.values = Matrix(3, 2);
        test.values(0, 0) = 1.5;
        test.values(0, 1) = 1.0;
        test.values(1, 0) = 0.0;
        test.values(1, 1) = 0.0;
        test.values(2, 0) = 5.0;
        test.values(2, 1) = 5.0;
        test.labels = {0, 1, 2};  // irrelevant for scoring
        test.feature_names = train.feature_names;
        test.label_names = train.label_names;
        test.class_count = 3;
        test.validate();

        const auto scores = knn_score(train, subset, test, 1);
        // index 1 (class 1) wins the tie against index 3 (class 2)
        CHECK(scores(0, 1) == 1.0);
        CHECK(scores(0, 2) == 0.0);
    }

    SECTION("uniform feature scaling leaves the argmax unchanged") {
        const Dataset big = gaussian_pair(2.0, 60, 9, 3);
        Dataset scaled = big;
        for (std::size_t f = 0; f < big.m(); ++f) {
            auto col = scaled.values.column(f);
            for (double& v : col) v *= 37.5;
        }
        const std::vector<std::size_t> all{0, 1, 2};
        const auto a = knn_score(big, all, big, 3);
        const auto b = knn_score(scaled, all, scaled, 3);
        CHECK(a == b);  // identical neighbour sets, identical frequencies
    }
}
