// Copyright 2026 The twincsp Authors
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

#ifndef TWINCSP_TRADE_DATA_HPP_
#define TWINCSP_TRADE_DATA_HPP_

#include <cstdint>
#include <string_view>

// Generated from data/ and scenarios/; tests check both copies agree.

namespace twincsp::data {

inline constexpr std::string_view kAsiaAfricaOceania1994 = R"TSV(# Asia-Africa-Oceania metal manufactures trade, 1994
# country_a<TAB>country_b<TAB>imports+exports in thousands of USD
China	Hong Kong	1482824
Japan	Thailand	894820
Japan	Korea	880295
China	Japan	630342
Malaysia	Singapore	484350
Japan	Malaysia	453463
Japan	Singapore	380454
Hong Kong	Japan	351919
Indonesia	Japan	200451
China	Korea	181392
Australia	New Zealand	168680
Japan	Philippines	138348
China	Singapore	135616
Japan	Australia	115283
Hong Kong	Singapore	110574
Singapore	Thailand	107720
China	Australia	90620
Australia	Indonesia	72387
Korea	Hong Kong	65315
Australia	Singapore	62392
Korea	Thailand	56160
Korea	Singapore	50098
Korea	Australia	45517
China	Thailand	44387
Australia	Malaysia	43068
Korea	Indonesia	41827
Indonesia	Malaysia	40291
China	Malaysia	39617
Singapore	Indonesia	39206
Malaysia	Thailand	37963
China	Indonesia	32817
India	Singapore	32130
Korea	Malaysia	31255
Japan	India	27655
Japan	South Africa	24555
Hong Kong	Malaysia	24159
Hong Kong	Thailand	23642
Hong Kong	Philippines	23396
China	South Africa	23166
Singapore	Philippines	21744
Hong Kong	South Africa	21277
Australia	India	20366
China	Philippines	19865
Israel	South Africa	19183
Korea	South Africa	17826
Korea	Philippines	17031
India	Malaysia	15817
Japan	New Zealand	15470
Korea	Pakistan	15469
Thailand	Australia	14377
China	Egypt	14342
China	Pakistan	13953
Hong Kong	Australia	13644
China	New Zealand	12810
Hong Kong	Indonesia	12604
Singapore	Sri Lanka	12253
China	Algeria	11709
Australia	Fiji	10589
Japan	Pakistan	10388
China	Kuwait	9232
China	Jordan	8014
China	Morocco	7077
South Africa	Mauritius	6805
Algeria	Tunisia	6283
China	Bangladesh	5217
India	Oman	4151
Thailand	Seychelles	3179
South Africa	Reunion	2566
Japan	Madagascar	2042
)TSV";

/// FNV-1a 64 of kAsiaAfricaOceania1994.
inline constexpr std::uint64_t kAsiaAfricaOceania1994Checksum = 0x8488faa7893eee17ULL;

inline constexpr std::string_view kScenarioFig5 = R"TSV(# Threshold 75M: East/Southeast Asia and Australasia form the core.
# vertex (cluster name or any member country)<TAB>class[<TAB>rep]
*	periphery
China	core
Algeria	semiperiphery
South Africa	semiperiphery	rep
India	semiperiphery
Pakistan	periphery	rep
Israel	periphery	rep
)TSV";

inline constexpr std::string_view kScenarioFig6 = R"TSV(# Threshold 125M: Australasia splits off and becomes a semiperiphery.
# vertex (cluster name or any member country)<TAB>class[<TAB>rep]
*	periphery
China	core
Algeria	semiperiphery
South Africa	semiperiphery	rep
India	semiperiphery
Australia	semiperiphery
Pakistan	periphery	rep
Israel	periphery	rep
)TSV";

inline constexpr std::string_view kScenarioFig7 = R"TSV(# Threshold 500M plus dissimilarity 1.0: East Asia is the core.
# vertex (cluster name or any member country)<TAB>class[<TAB>rep]
*	periphery
China	core
Algeria	semiperiphery
South Africa	semiperiphery	rep
India	semiperiphery
Australia	semiperiphery
Malaysia	semiperiphery
Pakistan	periphery	rep
Israel	periphery	rep
)TSV";

inline constexpr std::string_view kScenarioFig8 = R"TSV(# As fig7 with the Australasia-India quotient edge dropped.
# vertex (cluster name or any member country)<TAB>class[<TAB>rep]
*	periphery
China	core
Algeria	semiperiphery
South Africa	semiperiphery	rep
India	semiperiphery
Australia	semiperiphery	rep
Malaysia	semiperiphery
Pakistan	periphery	rep
Israel	periphery	rep
Fiji	periphery	rep
)TSV";

}  // namespace twincsp::data

#endif  // TWINCSP_TRADE_DATA_HPP_
