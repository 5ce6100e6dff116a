#include <gtest/gtest.h>

#include "pairblock/serialization.hpp"

using namespace pairblock;

namespace {

const std::vector<point> classic = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

json
line_doc()
{
        return certificate_to_json(build_certificate(12, 1, {{1}}, 1));
}

errc
load_error(const json& doc)
{
        try {
                certificate_from_json(doc);
        } catch (const error& e) {
                return e.code();
        }
        ADD_FAILURE() << "certificate loaded";
        return errc::parse_error;
}

} // namespace

TEST(CertificateJson, LineDocumentShape)
{
        auto doc = line_doc();
        EXPECT_EQ(doc["version"], "1");
        EXPECT_EQ(doc["N"], "12");
        EXPECT_EQ(doc["p"], "3");
        EXPECT_EQ(doc["m"], "4");
        EXPECT_EQ(doc["base"], "26");
        EXPECT_EQ(doc["u_prime"], json::array({"1"}));
        EXPECT_EQ(doc["directions"], json::parse(R"([["1"]])"));
        EXPECT_EQ(doc["residues"][0]["x"], "0");
        EXPECT_EQ(doc["residues"][0]["y"], "1");
        EXPECT_EQ(doc["residues"][0]["sign"], "1");
}

TEST(CertificateJson, RoundTripPreservesPartnerFunction)
{
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
                auto cert = build_certificate(9, 2, classic, seed);
                auto text = dump_canonical(certificate_to_json(cert));
                auto loaded = certificate_from_string(text);
                EXPECT_EQ(dump_canonical(certificate_to_json(loaded)), text);
                EXPECT_EQ(loaded.embedding().r, cert.embedding().r);
                cert.spec().board.for_each_point([&](const point& w) {
                        EXPECT_EQ(partner(w, loaded), partner(w, cert));
                });
        }
}

TEST(CertificateJson, TamperedFieldsRejected)
{
        auto doc = line_doc();
        doc["residues"][0]["y"] = "2";
        EXPECT_EQ(load_error(doc), errc::invariant_violation);

        doc = line_doc();
        doc["residues"][0]["sign"] = "-1";
        EXPECT_EQ(load_error(doc), errc::invariant_violation);

        doc = line_doc();
        doc["u_prime"] = json::array({"3"}); // 3 = 0 mod 3
        EXPECT_EQ(load_error(doc), errc::invariant_violation);

        doc = line_doc();
        doc["base"] = "25";
        EXPECT_EQ(load_error(doc), errc::invariant_violation);

        doc = line_doc();
        doc["m"] = "5";
        EXPECT_EQ(load_error(doc), errc::invariant_violation);

        doc = line_doc();
        doc["directions"] = json::parse(R"([["-1"]])");
        EXPECT_EQ(load_error(doc), errc::invariant_violation);
}

TEST(CertificateJson, MalformedRejected)
{
        auto doc = line_doc();
        doc["N"] = 12; // integers must be strings
        EXPECT_EQ(load_error(doc), errc::parse_error);

        doc = line_doc();
        doc.erase("residues");
        EXPECT_EQ(load_error(doc), errc::parse_error);

        doc = line_doc();
        doc["version"] = "2";
        EXPECT_EQ(load_error(doc), errc::parse_error);

        EXPECT_THROW(certificate_from_string("{not json"), error);
}

TEST(ReportJson, Counterexample)
{
        auto cert = build_certificate(12, 1, {{1}}, 1);
        auto doc = report_to_json(verify_blocking(cert, 3));
        EXPECT_EQ(doc["blocked"], false);
        EXPECT_EQ(doc["windows_checked"], 10);
        EXPECT_EQ(doc["counterexample"]["start"], json::array({1}));
        EXPECT_EQ(doc["counterexample"]["points"].size(), 3u);
        EXPECT_FALSE(report_to_json(verify_blocking(cert)).contains("counterexample"));
}
