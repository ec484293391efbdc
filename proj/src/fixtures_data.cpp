// Bundled fixture text. The factor table transcribes published complete
// factorizations of 2^L - 1 for every bundled degree; a test re-verifies
// each entry (exact product and Miller-Rabin primality of every factor).
// The remaining blocks are emitted by tools/pals_fixgen from the documented
// seeds and must match the files under fixtures/ byte for byte.

#include "pals/fixtures.hpp"

namespace pals::fixture_text {

const char* const kFactors =
    "2: 3\n"
    "3: 7\n"
    "4: 3,5\n"
    "5: 31\n"
    "7: 127\n"
    "8: 3,5,17\n"
    "11: 23,89\n"
    "13: 8191\n"
    "16: 3,5,17,257\n"
    "17: 131071\n"
    "19: 524287\n"
    "23: 47,178481\n"
    "29: 233,1103,2089\n"
    "32: 3,5,17,257,65537\n"
    "127: 170141183460469231731687303715884105727\n"
    "163: 150287,704161,110211473,27669118297,36230454570129675721\n"
    "173: 730753,1505447,70084436712553223,155285743288572277679887\n"
    "181: 43441,1164193,7648337,7923871097285295625344647665764672671\n"
    "193: 13821503,61654440233248340616559,14732265321145317331353282383\n"
    "199: 164504919713,4884164093883941177660049098586324302977543600799\n"
    "223: 18287,196687,1466449,2916841,1469495262398780123809,596242599987116128415063\n"
    "229: 1504073,20492753,59833457464970183,467795120187583723534280000348743236593\n"
    "239: 479,1913,5737,176383,134000609,7110008717824458123105014279253754096863768062879\n"
    "256: 3,5,17,257,641,65537,274177,6700417,67280421310721,59649589127497217,5704689200685129054721\n";

const char* const kPolynomials =
    "32: 32,29,24,23,21,19,17,16,14,13,11,9,6,3,0\n"
    "163: 163,160,158,157,155,153,151,150,148,147,143,140,137,135,132,129,128,127,124,122,121,120,119,118,117,112,110,109,107,106,103,102,100,99,97,95,93,92,91,90,88,87,86,82,81,76,75,74,71,64,62,61,60,59,58,55,54,52,50,47,46,45,44,43,38,35,34,28,26,25,23,21,20,18,16,14,12,11,8,4,0\n"
    "173: 173,172,171,168,166,164,159,157,156,155,154,150,149,148,146,143,140,139,137,135,131,129,128,127,123,121,120,119,115,114,113,112,111,110,109,108,107,103,102,101,100,99,98,97,96,94,92,89,88,87,86,84,80,75,71,70,68,64,62,58,57,56,53,51,45,42,40,38,37,35,34,33,32,31,28,27,26,25,20,18,16,14,12,10,7,5,0\n"
    "181: 181,179,178,176,175,172,170,169,166,164,163,160,159,153,150,148,145,143,142,141,140,139,138,137,136,135,133,131,128,127,126,123,122,121,119,117,112,110,109,108,107,106,104,103,101,100,98,97,96,93,91,90,86,85,83,82,80,74,73,67,66,65,62,61,60,59,57,55,54,53,49,47,41,40,38,35,34,31,25,24,21,18,16,13,12,10,9,6,3,1,0\n"
    "193: 193,192,189,188,187,186,185,184,181,180,178,177,169,168,166,163,157,156,154,151,150,147,145,144,143,142,141,135,134,133,132,129,126,124,123,122,121,120,115,114,113,111,110,109,102,100,95,94,93,90,86,85,80,79,77,74,73,69,68,63,62,61,60,59,58,57,56,54,52,51,48,46,45,43,38,35,33,29,26,25,24,23,21,18,17,16,15,13,12,10,9,8,6,4,2,1,0\n"
    "199: 199,198,197,196,192,187,186,183,182,179,178,177,176,175,174,172,169,167,166,165,159,154,153,151,147,145,141,139,135,134,132,131,129,127,123,122,121,120,119,117,112,111,110,108,106,104,102,101,100,99,96,94,90,86,85,80,78,76,75,73,69,68,67,65,63,62,60,58,56,54,53,51,50,48,47,46,45,44,41,40,37,33,32,30,27,26,25,24,23,21,20,19,15,11,8,6,5,3,0\n"
    "223: 223,219,217,215,212,210,209,207,205,204,203,202,200,198,197,194,187,186,185,182,180,179,177,174,171,169,168,164,162,158,155,154,149,148,147,145,142,141,139,137,133,130,126,123,121,120,119,117,116,113,112,111,109,105,104,102,101,100,98,97,96,95,93,90,88,87,86,84,81,79,77,76,74,73,71,70,69,68,66,65,64,61,59,55,54,52,51,44,43,40,39,36,34,32,30,29,26,24,22,18,16,14,11,9,7,6,5,3,2,1,0\n"
    "229: 229,227,225,221,217,215,209,208,207,205,204,202,198,195,194,192,177,175,174,172,171,170,166,165,163,162,160,159,158,157,156,155,153,150,148,147,144,142,141,140,137,134,133,128,127,126,125,124,122,121,120,119,118,117,116,113,111,106,105,104,102,101,100,99,98,97,95,94,93,90,89,88,81,79,76,75,74,73,72,71,69,68,67,66,64,61,56,54,53,49,48,46,45,43,42,41,40,39,38,34,32,31,27,22,21,17,16,9,8,7,6,5,3,2,0\n"
    "239: 239,238,237,235,232,231,230,229,228,225,220,219,217,212,209,208,207,206,201,200,199,198,197,195,192,191,186,185,184,183,182,181,180,179,178,176,175,174,172,171,170,168,166,165,163,162,159,156,155,152,151,150,149,146,144,143,142,136,135,133,126,125,123,121,119,118,117,116,111,108,101,99,98,97,96,95,93,92,91,88,83,82,81,79,74,72,68,66,64,57,56,53,52,51,50,46,44,43,42,39,37,34,33,23,21,20,19,16,15,14,8,7,6,5,4,3,2,1,0\n"
    "256: 256,255,254,250,248,247,245,241,240,237,234,231,228,225,224,223,221,219,218,216,215,214,212,211,204,201,200,199,198,197,196,192,189,188,184,183,179,173,172,170,168,167,166,164,162,160,158,156,155,148,147,146,143,141,140,138,137,135,134,130,129,127,125,124,119,115,114,113,112,107,101,97,96,95,94,90,89,87,86,84,82,80,78,76,75,74,72,70,67,66,62,60,57,54,53,50,48,46,45,44,43,41,39,37,35,31,30,28,26,25,24,23,22,21,20,18,17,16,15,12,11,10,8,6,5,2,0\n";

const char* const kToyPolynomials =
    "3: 3,1,0\n"
    "4: 4,1,0\n"
    "5: 5,2,0\n"
    "7: 7,3,0\n"
    "8: 8,6,3,2,0\n"
    "11: 11,10,9,5,0\n"
    "13: 13,11,9,6,5,4,0\n"
    "16: 16,14,13,12,5,3,0\n"
    "17: 17,14,13,11,10,5,3,2,0\n"
    "19: 19,11,10,8,7,6,4,2,0\n"
    "23: 23,20,16,13,8,7,5,4,3,2,0\n"
    "29: 29,28,26,24,22,21,20,19,18,17,12,11,6,5,0\n";

const char* const kSpn =
    "0 8 16 24 1 9 17 25 2 10 18 26 3 11 19 27 4 12 20 28 5 13 21 29 6 14 22 30 7 15 23 31\n"
    "d67ab0431ce98f25\n"
    "95a0c3f67e1d248b\n"
    "38ad9f74e51206cb\n"
    "af4896e3c1725b0d\n"
    "2dc0eb354a9617f8\n"
    "b217ed486cf09a35\n"
    "241a9fe3bdc67805\n"
    "7ad481ebc3092f56\n";

const char* const kSboxes8 =
    "5ff0319651976a285db5eaeb5b7a9ca3\n"
    "1bfdb386938bce825462404ea2212d00\n"
    "7278c22561b2cb7ed7ccb70e23aae0e5\n"
    "50a158da3b70d2eff21fe3a97fd52abb\n"
    "69ae5e57744b172e5a79f3d89432426f\n"
    "33ca02ec1638d463268e1d81bc8ccdc6\n"
    "27f18daba56e36e705399e1ef88a6cf4\n"
    "34dfaf4c64032f8852442c3c55a635b6\n"
    "ff67834146f708a418fc66b049c00965\n"
    "80dde8e6c975beacc1220f3d915cd307\n"
    "4815c8a060c40adcee3f43db90e906e2\n"
    "299a3aa73087598f857cc37113f6adcf\n"
    "11fb3ede6dbf241a04c59b0bfee48499\n"
    "764f1c2b190173376bd0680de1984a7b\n"
    "4dfa129d47c7f59f20147dd9d653b9bd\n"
    "b10ced899245b8f99577a8d110b456ba\n"
    "c93ad8a2b99eea809d9f2410c27bf586\n"
    "5df173c3b61dcc721302b7d3054dd56e\n"
    "db97a48da5642dcf5f38c6b1eb275a7f\n"
    "b371336fe31791aaff830678f4e612be\n"
    "1e018ed40c99b85c8947e23dd0a6709c\n"
    "ab7741b5a307ae6aa12a3481f9c77494\n"
    "d122e1d242e80a880e2e3608cd67378f\n"
    "5929e51cc43f93e4b4454618fb8557f8\n"
    "d996146b6c488adde03bec5250f700ba\n"
    "390fc14b84b07e69a77dbc4e4c87d77c\n"
    "63e7fd0dda55f6a9b254357516fe2165\n"
    "11ef19307a4f312503ad8244623ecebb\n"
    "a81f4aee8c26cb9843af532358bf5649\n"
    "f39a0bf0fa2fe9c0dc5b09df2c9b5e51\n"
    "66bd76ca1a2b15dea0c8fc289060d692\n"
    "0479681bf28bacedc53c612032406d95\n"
    "7927de2face2bb6d120b1d211f3cb8be\n"
    "aae6346afdb0c73ef7d8b38ac593976e\n"
    "bcdce3963f53656355100326f6f54d87\n"
    "64eb300fd52c9df4faeaf9fff1a338b1\n"
    "5cc313604b35192ea091c8422dcb7b9a\n"
    "73dd28711bfc1aabb218666862fb9f02\n"
    "320ccc69da8352c4a984d33389a16b40\n"
    "4f570db6bd39c19841b9ed7c568ed074\n"
    "069e9ca2c65e2580d6f3cf36add72454\n"
    "3b880a485811315b49af727a81bf054e\n"
    "d4a645ceb4c90e77435017ae8b6fe98d\n"
    "3aba82efcd5fe78f75c00876e4f0d904\n"
    "4c155df2a89bc23de809993744ca9578\n"
    "7f2b230786d194db7d6770ee22df16a5\n"
    "5100a4b790591ef82a5a14e0b57e46d2\n"
    "6c85fe2920a74a471c9201e1ec618ce5\n"
    "b2feb609db8b65d87951e6b0803f3d3a\n"
    "550c8612e5a505ea20a4ae6be775a73c\n"
    "a88cbb540a38632be9c1aa0dc4390b74\n"
    "95018a15e8479bec137773d3a2117d82\n"
    "1bd030adf2022da9df92993325c62f81\n"
    "bcac9dcae493945f978ffd5dcc19dd07\n"
    "3b88349f7b2ca3fcc7ab37229e67a06d\n"
    "48bf0fff52f94ce34a2a411862c9d9e1\n"
    "b870e2a61ed7f859f4b9981444c232f3\n"
    "4d1c66b4e05cba0ed129debeaf178956\n"
    "35fbf687576cf5cf5ac54550605e1f10\n"
    "28cb8edcb17c067a6f7e366ab39016a1\n"
    "2e4ece61240384087242781ad67f9a6e\n"
    "91c8da499c69ef2331edeec3580068f7\n"
    "5bb79664463e4fbd8526538d1d21fa04\n"
    "b540d2cdf0ebd527c0d471f18376434b\n";

const char* const kFTable1 =
    "n=9\n"
    "5aa5a55a5a5aa5a569969669996666999999666656a9a9563cc3c33cc3c33c3c\n"
    "0ff0f00f3cc33cc3969669695aa55aa5966996696699669969696969aa5555aa\n";

const char* const kFTable2 =
    "n=9\n"
    "3cc3c33c3c69c39696696996f00f0ff0a55aa55a55aaaa559696969669699696\n"
    "996699665aa5a55a66669999c3c33c3c33cccc33699669965a5aa5a566999966\n";

const char* const kFTable3 =
    "n=9\n"
    "cc3333cc36c9c936699669963c3cc3c35a5aa5a59999666666996699a55a5aa5\n"
    "5aa55aa5966969969696969655aaaa550ff0f00fc33cc33c3cc3c33c69699696\n";

const char* const kFTable4 =
    "n=9\n"
    "5aa5a55a66996699999966666996966969699696a5a55a5a96969696cc3333cc\n"
    "aa5555aa3cc3699699666699699669963cc3c33cc3c33c3ca55aa55ac33cc33c\n";

const char* const kFTable5 =
    "n=9\n"
    "666699995a5aa5a5a55aa55af00f0ff0669999663cc33cc36969969669969669\n"
    "c33c3cc3aa5555aaa55a5aa533cccc333c69c396c3c33c3c9966996696699669\n";

const char* const kFTable6 =
    "n=9\n"
    "5aa55aa5c33c3cc355aaaa5596969696699669969966996633cccc3396966969\n"
    "f00f0ff03c3cc3c396696996996666993c69c3963cc33cc399996666a5a55a5a\n";

const char* const kFTable7 =
    "n=9\n"
    "96966969a55aa55a6969696996699669cc3333cc5a69a5965aa5a55a55aaaa55\n"
    "999966666699669999666699a5a55a5a3c3cc3c3c33c3cc30ff0f00f69969669\n";

const char* const kFTable8 =
    "n=9\n"
    "c33c3cc3c33cc33c66996699cc3333cc5aa5a55a999966661ee1e11ea55aa55a\n"
    "f00f0ff096696996a5a55a5ac3c33c3c696996966969696955aaaa5566999966\n";

const std::array<const char*, 8> kFTables = {kFTable1, kFTable2, kFTable3, kFTable4,
                                             kFTable5, kFTable6, kFTable7, kFTable8};

} // namespace pals::fixture_text
