#include <chaoshash/pipeline.hpp>
#include <chaoshash/rng.hpp>

#include <gtest/gtest.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

using namespace chaoshash;

namespace {

const char* const kSampleMessage = "The original text";

// Frozen stage values for the sample message, octet by octet.
const std::string kSamplePadded =
    "10101001" "10100011" "00101010" "00001101" "11111100" "10110100" "11100111" "11010011"
    "10111011" "00001110" "11000100" "00011101" "00110010" "11111000" "11101001" "11110001";

const std::string kSampleFolded =
    "11111010" "11100101" "01111110" "00010110" "00000101" "11011101" "00101000" "01110100"
    "11001101" "00010011" "01001100" "00100111" "01010111" "00001001" "00111010" "00010011"
    "00100001" "01110010" "01000011" "10101011" "10010000" "11001011" "00100010" "11001100"
    "10111000" "01010010" "11101110" "10000001" "10100001" "11111010" "10011101" "01111101";

BitString random_bits(SplitMix64& rng, std::size_t length) {
    BitString out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(rng.next_bool());
    return out;
}

int bits_to_int(const std::string& bits) {
    int v = 0;
    for (char c : bits) v = (v << 1) | (c == '1');
    return v;
}

}  // namespace

TEST(Encode, SevenBitCodesMostSignificantFirst) {
    EXPECT_EQ(encode_message("T", EncodingMode::ascii7).to_string(), "1010100");
    EXPECT_EQ(encode_message("Th", EncodingMode::ascii7).to_string(), "10101001101000");
    EXPECT_TRUE(encode_message("", EncodingMode::ascii7).empty());
}

TEST(Encode, ByteModeKeepsAllEightBits) {
    EXPECT_EQ(encode_message("T", EncodingMode::bytes).to_string(), "01010100");
    EXPECT_EQ(encode_message("\xff", EncodingMode::bytes).to_string(), "11111111");
}

TEST(Encode, RejectsHighBytesInAsciiMode) {
    try {
        encode_message("ab\x80" "c", EncodingMode::ascii7);
        FAIL() << "expected EncodingError";
    } catch (const EncodingError& e) {
        EXPECT_EQ(e.index(), 2u);
    }
    EXPECT_NO_THROW(encode_message("ab\x80" "c", EncodingMode::bytes));
}

TEST(Pad, SampleMessageEndsWithLengthOctet) {
    const BitString padded = pad_with_length(encode_message(kSampleMessage, EncodingMode::ascii7));
    EXPECT_EQ(padded.to_string(), kSamplePadded);
}

TEST(Pad, EmptyInputBecomesThreeOnes) {
    EXPECT_EQ(pad_with_length(BitString()).to_string(), "111");
}

TEST(Pad, LengthAlgebraHolds) {
    SplitMix64 rng(3);
    for (std::size_t length : {1u, 2u, 7u, 63u, 64u, 119u, 500u, 2000u}) {
        const BitString s = random_bits(rng, length);
        const BitString padded = pad_with_length(s);
        std::size_t bits_for_length = 0;
        for (std::size_t v = length + 1; v > 0; v >>= 1) ++bits_for_length;
        ASSERT_EQ(padded.size(), length + 1 + bits_for_length + 1);
        for (std::size_t i = 0; i < length; ++i) EXPECT_EQ(padded.bit(i), s.bit(i));
        EXPECT_TRUE(padded.bit(length));
        EXPECT_TRUE(padded.bit(length + 1));  // minimal binary has no leading zero
        EXPECT_TRUE(padded.bit(padded.size() - 1));
        EXPECT_EQ(bits_to_int(padded.to_string().substr(length + 1, bits_for_length)),
                  static_cast<int>(length + 1));
    }
}

TEST(Mirror, AppendsReflectionWithoutLastBit) {
    EXPECT_EQ(mirror_extend(BitString::from_string("10")).to_string(), "101");
    EXPECT_EQ(mirror_extend(BitString::from_string("1")).to_string(), "1");
    EXPECT_EQ(mirror_extend(BitString::from_string("1100")).to_string(), "1100011");
    EXPECT_THROW(mirror_extend(BitString()), std::invalid_argument);
}

TEST(Mirror, SampleMessageBoundaryOctets) {
    const BitString mirrored =
        mirror_extend(pad_with_length(encode_message(kSampleMessage, EncodingMode::ascii7)));
    ASSERT_EQ(mirrored.size(), 255u);
    EXPECT_EQ(mirrored.octet_value(16), bits_to_int("00011111"));
    EXPECT_EQ(mirrored.octet_value(17), bits_to_int("00101110"));
    EXPECT_EQ(mirrored.to_string().substr(240), "100010110010101");
}

TEST(Extend, CyclesUpToTheNextBlockBoundary) {
    SplitMix64 rng(5);
    const BitString t = random_bits(rng, 255);
    const BitString d = extend_to_block_multiple(t);
    ASSERT_EQ(d.size(), 512u);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d.bit(i), t.bit(i % 255));

    const BitString exact = random_bits(rng, 512);
    EXPECT_EQ(extend_to_block_multiple(exact), exact);
    EXPECT_EQ(extend_to_block_multiple(random_bits(rng, 513)).size(), 1024u);
    EXPECT_THROW(extend_to_block_multiple(BitString()), std::invalid_argument);
}

TEST(Fold, XorsConsecutiveBlocks) {
    SplitMix64 rng(7);
    const BitString half = random_bits(rng, 256);
    BitString doubled = half;
    doubled.append(half);
    EXPECT_EQ(fold_to_state(doubled).count_ones(), 0u);

    BitString complemented = half;
    for (std::size_t i = 0; i < 256; ++i) complemented.push_back(!half.bit(i));
    EXPECT_EQ(fold_to_state(complemented).count_ones(), 256u);

    EXPECT_THROW(fold_to_state(random_bits(rng, 100)), std::invalid_argument);
    EXPECT_THROW(fold_to_state(BitString()), std::invalid_argument);
}

TEST(Fold, SampleMessageState) {
    const BitString extended = extend_to_block_multiple(
        mirror_extend(pad_with_length(encode_message(kSampleMessage, EncodingMode::ascii7))));
    EXPECT_EQ(fold_to_state(extended).to_string(), kSampleFolded);
}

TEST(Intermediate, SevenRotationsOfOctets) {
    const BitString extended = extend_to_block_multiple(
        mirror_extend(pad_with_length(encode_message(kSampleMessage, EncodingMode::ascii7))));
    const IntermediateSequence u = build_intermediate_sequence(extended);
    ASSERT_EQ(u.size(), 448u);
    EXPECT_EQ(u[0], 169);
    EXPECT_EQ(u[1], 163);
    const std::string bits = extended.to_string();
    for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(u[i], bits_to_int(bits.substr(8 * i, 8)));
    // second pass reads the block rotated one bit to the left
    EXPECT_EQ(u[64], bits_to_int(bits.substr(1, 8)));
    EXPECT_EQ(u[65], bits_to_int(bits.substr(9, 8)));
    // last pass, rotation by six
    EXPECT_EQ(u[6 * 64], bits_to_int(bits.substr(6, 8)));
}

TEST(Intermediate, AllZeroBlockGivesZeros) {
    const IntermediateSequence u =
        build_intermediate_sequence(BitString(std::vector<bool>(512, false)));
    ASSERT_EQ(u.size(), 448u);
    for (int v : u) EXPECT_EQ(v, 0);
}

TEST(Intermediate, RejectsOffSizeInput) {
    SplitMix64 rng(9);
    EXPECT_THROW(build_intermediate_sequence(random_bits(rng, 256)), std::invalid_argument);
    EXPECT_THROW(build_intermediate_sequence(BitString()), std::invalid_argument);
}

TEST(Schedule, RecurrenceMatchesHandComputation) {
    // s[0] = u[0]; s[i] = (u[i] + 2 s[i-1] + i) mod 256
    const HashStrategy s = build_strategy({0, 0, 0, 0});
    EXPECT_EQ(s, (HashStrategy{0, 1, 4, 11}));
    const HashStrategy t = build_strategy({169, 163});
    EXPECT_EQ(t, (HashStrategy{169, 246}));
}

TEST(Schedule, SampleMessageLeadingTerms) {
    const BitString extended = extend_to_block_multiple(
        mirror_extend(pad_with_length(encode_message(kSampleMessage, EncodingMode::ascii7))));
    const HashStrategy s = build_strategy(build_intermediate_sequence(extended));
    ASSERT_EQ(s.size(), 448u);
    EXPECT_EQ(s[0], 169);
    EXPECT_EQ(s[1], 246);
    for (int v : s) {
        ASSERT_GE(v, 0);
        ASSERT_LE(v, 255);
    }
}

TEST(Schedule, RejectsBadInput) {
    EXPECT_THROW(build_strategy({}), std::invalid_argument);
    EXPECT_THROW(build_strategy({256}), std::out_of_range);
    EXPECT_THROW(build_strategy({-1}), std::out_of_range);
}

TEST(DigestStage, DoubleFlipCancels) {
    SplitMix64 rng(11);
    std::vector<bool> bits(256);
    for (std::size_t i = 0; i < 256; ++i) bits[i] = rng.next_bool();
    const CellState e{std::vector<bool>(bits)};
    EXPECT_EQ(compute_digest(e, {5, 5}), Digest(e));
}

TEST(DigestStage, FullSweepComplements) {
    HashStrategy all;
    for (int i = 0; i < 256; ++i) all.push_back(i);
    const Digest d = compute_digest(CellState(SystemSize(256)), all);
    EXPECT_EQ(d.hex(), std::string(64, 'F'));
}

TEST(DigestStage, MatchesParityOracle) {
    SplitMix64 rng(13);
    for (int round = 0; round < 200; ++round) {
        std::vector<bool> bits(256);
        for (std::size_t i = 0; i < 256; ++i) bits[i] = rng.next_bool();
        const CellState e{std::vector<bool>(bits)};
        HashStrategy s(rng.next_below(64));
        for (int& v : s) v = static_cast<int>(rng.next_below(256));
        CellState mask(SystemSize(256));
        for (int v : s) mask.flip_bit(static_cast<std::size_t>(v));
        EXPECT_EQ(compute_digest(e, s), Digest(e ^ mask));
    }
}

TEST(DigestStage, ValidatesInput) {
    EXPECT_THROW(compute_digest(CellState(SystemSize(8)), {1}), std::invalid_argument);
    EXPECT_THROW(compute_digest(CellState(SystemSize(256)), {256}), std::out_of_range);
}

TEST(DigestValue, HexRoundTripsAndCompares) {
    SplitMix64 rng(15);
    std::vector<bool> bits(256);
    for (std::size_t i = 0; i < 256; ++i) bits[i] = rng.next_bool();
    const Digest d{CellState{std::vector<bool>(bits)}};
    EXPECT_EQ(Digest::from_hex(d.hex()), d);
    for (std::size_t i = 0; i < 256; ++i) EXPECT_EQ(d.bit(i), bits[i]);

    std::string lower = d.hex();
    for (char& c : lower) c = static_cast<char>(std::tolower(c));
    EXPECT_EQ(Digest::from_hex(lower), d);

    EXPECT_THROW(Digest::from_hex("123"), std::invalid_argument);
    EXPECT_THROW(Digest::from_hex(std::string(64, 'G')), std::invalid_argument);
}

TEST(DigestValue, HammingCountsBitDifferences) {
    const Digest zero{CellState(SystemSize(256))};
    const Digest ones{CellState(std::vector<bool>(256, true))};
    EXPECT_EQ(zero.hamming(zero), 0u);
    EXPECT_EQ(zero.hamming(ones), 256u);
    EXPECT_EQ(ones.hamming(zero), 256u);
}

TEST(Hash, DeterministicAndEncodingSensitive) {
    EXPECT_EQ(hash("abc").hex(), hash("abc").hex());
    EXPECT_NE(hash("abc", EncodingMode::ascii7), hash("abc", EncodingMode::bytes));
    EXPECT_EQ(hash("abc"), hash_encoded(encode_message("abc", EncodingMode::ascii7)));
}

TEST(Hash, EmptyMessageIsDefined) {
    EXPECT_EQ(hash("").hex().size(), 64u);
}

TEST(Hash, SingleBitFlipsChangeTheDigest) {
    SplitMix64 rng(17);
    for (int round = 0; round < 20; ++round) {
        std::string message(8, '\0');
        for (char& c : message) c = static_cast<char>(32 + rng.next_below(95));
        BitString encoded = encode_message(message, EncodingMode::ascii7);
        const Digest base = hash_encoded(encoded);
        encoded.flip_bit(rng.next_below(encoded.size()));
        EXPECT_NE(hash_encoded(encoded), base);
    }
}
