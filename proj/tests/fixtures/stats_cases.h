#pragma once
#include <vector>
namespace fixtures {
struct TwoSampleCase { std::vector<double> x, y; double stat, df, p; };
struct OneSampleCase { std::vector<double> x; double value; };
struct CiCase { std::vector<double> x; double level, mean, lo, hi; };
struct JsdCase { std::vector<double> p, q; double value; };
inline const std::vector<TwoSampleCase> welch = {
  {{0.1320865903122387, 1.017759222456577, 0.7489803271159333, 0.13932305522464541, 0.49765894426926655, -1.956630666642493, -1.8297156877904217, 1.109515003013197}, {-0.33492491369938726, -0.39866432329710383, -1.2381691388360434, 0.12178762345167685, 0.777006587394325, 0.813855751798287, 0.29533780458552417, 0.27094793967972364}, -0.11402153123403848, 11.005638836017164, 0.9112742064362103},
  {{0.6050588067279222, 2.2441011736621252, -1.1729472163804076, 0.7344257798897463, 0.02131563832069505}, {2.161990262705358, 0.0019234885106984418, -1.1065582658578543, 0.3280199495067746, 0.20939187656060276, 5.860714573942419, 3.684502192849197, 2.2760420909102352, -0.3102548196765304, -1.1146585367431685, -0.4152289268959047, -1.6337911243832692}, -0.4020326748505541, 13.322372372058757, 0.6940356248357853},
  {{-2.1662301708388876, 2.4425824233589086, -0.9857997328413832, 4.062510469021814, 1.453298427692689, -1.1882648141414909, 1.8025978580359703, 2.187968698421102, 2.630907804634468, 0.9241221022063968, -0.3462148917758974, -2.208316822898745, 0.27494615552909335, 2.6092820303147906, -3.5228419994034756, 1.3284702191671782, 1.696657098883086, -0.00736364058852456, -1.4804544760795437, -2.1230477560588192, 0.5145907811514936, -1.6157324254079561, -2.9692349504598994, 1.9336706055093127, -0.3607345805254493, 0.7931035791577159, -2.996053701837314, 0.272930693180379, -0.6048292794082666, 4.71703393104158}, {0.7041550490665283, 1.6293847360693952, 0.9668128608272135, 1.750793410449243, 0.8278694737967315, 1.278980851244351, 0.6527326948707314, 1.6513445049293303, -0.06658559640395922, 0.435654743368312, 1.2318706038159364, 1.8642302534230035, 0.9435124673121672, 0.6030362590824274, 0.7658543425420886, 1.6252486514427382, 1.4513755813162221, 2.0937395870324647, 0.8375796664305524, 1.2938192178330181, 1.5063681085621135, 1.4767106185173038, 1.153313302102775, 0.8172348558107492, 0.7522230748216691, 0.7173966290732101, 0.8161427875310856, 1.2082910271025853, 0.5029995051230757, 1.1066353294301712}, -2.1510138586670484, 32.07266989501804, 0.039111619661375704},
  {{-0.2278101018881219, -1.6379659836123621, -1.1642421066755426, -1.36640322882703, -0.6894124119115541, -1.02638194483751, -1.3383163075874034, -1.2326162426894278, -0.214001223659675, -0.8294215776897386}, {4.096980031436519, 3.747883411467204, -5.080150212757276, 4.706348632640091, 2.059535130375072, 2.315455040382485, -0.2437824463501972, 1.547048143162299, 1.0138737621015905, 2.5029683722182035, -6.750556412075948, -1.5128058298206777, -1.695062936361062, 5.011966731328432, 2.744408188641816, 2.7117047220087995, 1.7724381100707105, -2.589665189481245, -0.13060779226797914, 6.717265617547681, 0.1070067662215024, 4.909171313522759, 3.1339474408016983, -0.35703490687307493, 1.6185347546171232, -2.0643500766395086, 1.7355607366827497, -0.9822281008618736, -2.5491235606469758, -1.114276774365655, 0.4460803939240453, 1.271665989001426, 0.9360598802532162, -4.297525260869037, -0.010486763669437238, -3.00034693629239, 1.26657519333821, 3.266966170577237, -4.725967345885856, -7.097143525941039}, -2.553607729987348, 44.68788334975503, 0.014145117322906494},
  {{2.9993249830462263, 2.866504115160494, 2.968608852572151, 2.9853793958183505, 2.7047639817235725, 3.0682675389709892}, {2.9245874444143105, 2.8005967223070876, 3.020756795103901, 3.0327537127242614, 2.9794344872335667, 3.0497304593198704}, -0.5509569850480547, 9.115982053481329, 0.5949064360009012},
  {{8.706438968937768, 12.430100499606151, 9.921378442639988, 12.200192290719603, 8.833357973925978, 11.18210188596355, 8.79893493731781, 15.673244984128818, 19.590931091526745, 9.988617338265554, 6.926116888343015, 11.923956444838653, 14.74854792612484, 13.44428378287325, 1.1354840884125217, 11.687146140071073, 8.320385390404063, 4.188238588292321, 12.376655790256706, 7.616946094028953, 10.413802590181339, 13.845589376124863, 4.334325849071838, 15.060734851843513, 7.377660752569131}, {5.586635245667695, 9.759779465305652, 8.551428414223048, 8.19262823608675, 9.466588773262838, 8.750014764693844, 8.61488153538505, 9.474248754496028, 11.18967182108381, 9.824325795954971, 8.020802315751157, 8.613968568322317, 8.158614920003433}, 1.8552445949623673, 32.001456028687095, 0.07279336106007987},
  {{-0.4841384678007298, -0.0004420574725047811, -0.771411460447783, -1.118567255442943, 0.6767207777080954, -1.4191828276233707, -0.8391083466803495, -0.4730899434853296, 0.4661253100790232}, {0.8221184412612667, 1.120720968219476, -0.339883089733642, -0.26972948457213014, -0.7230717815674378, -2.1197155323410892, -0.32793627955423066, 0.9340378463325687, -0.3548984014652766}, -0.7355561538403742, 14.322392783720248, 0.47387519448191195},
  {{4.30313569358664, 2.090782156737785, 0.23051162289098404, 0.4166883217065225, 1.4724795538536235, 3.1462652841249703, 2.726428084441225, 1.73008608225327, 2.2650241449480224, 2.6764696285920015, 3.0277857663419083, 3.899221567675144, 4.57590460096246, 1.915309367638687, 3.0452498672895194, 3.139254835044287, -0.750256467322886, 1.260562252248204, 0.8355092056652795, -2.2954115773554626, 3.003208958992023, 2.496260502140851, 3.8932436054133905, -0.10856794489426758, 1.6814024265830507, 1.2199315595354019, 1.3977148465772529, 1.242923651308087, 3.554752209409784, 0.01006495239717875, 3.294402160399512, 0.23480960712096466, 1.916243835725709, -0.8501540114726143, 2.6740229832802753, 2.4504997778180364, 4.5500514777312535, 2.9327527337458834, -0.03319901725634944, 2.6604184878958224, 3.738226726662891, 2.988220910836216, 3.3619158232487965, -0.03683721854930333, 3.34827056604914, 1.927778730228991, 3.3454926280087474, 1.2601119254039175, 0.40065896208806917, 4.979855558125815}, {3.3352593965668498, 2.608008557496964, 2.7229094500349755, 2.0476476961183456, 2.6909408366765777, 3.4835735247387065, 2.1492559175801635}, -2.1568766984241874, 24.818516990923374, 0.04090042237711333},
  {{-0.7713912411061004, -2.333346081034507, -2.8354007046300467, -2.2956618824410633, -3.9904265256624725, -2.4881513173445526, -3.4466048927791273, -3.1780449279109484, -2.9265067243699883, -3.0127843409280395, -3.5430753480738066, -0.9817686512500128, -3.1190067957188172, -2.4283627569205035, -4.26590835170394}, {-3.215661662094597, -3.9613202910065564, -4.604698224233428, -3.8967176578258975, -3.7950523551053155, -3.53952920595076, -3.112224137053739, -3.353238424192717, -3.028151019614752, -3.9720301412846375, -2.9877093413062936, -3.0868760773953565, -2.0028536321027777, -4.104493182620146, -3.2544446263913898}, 2.3183703959977726, 24.010271469402362, 0.02926431071301677},
  {{97.86191722671516, 108.74763566334144, 106.87852684501279, 95.70326094165594, 99.73432398200835, 94.3392994716776, 104.79695487985131, 96.5805950155988, 108.17118646215806, 98.96291860345687, 104.38012094113961, 100.0749486347214, 101.6337686808249, 100.33009234082773, 91.27123217412327, 106.83003889820674, 90.24841448199082, 100.19435588421807, 99.689766395297, 93.14548148263046, 107.3549109219775, 91.90606795697063, 101.4543930857866, 96.23804797218529, 99.93092090644777, 100.18226579283066, 96.66955811890845, 90.37104893780844, 112.44012779725989, 102.18249333049818, 111.42397410685881, 108.65458166541704, 102.36789288578304, 107.77442993202382, 104.7019160644667, 105.3382052556661, 98.86098714447009, 97.31975511930524, 96.11949237497431, 99.63015115184206}, {87.00493112730308, 93.54884212094984, 96.32782495288467, 83.52602469039496, 95.86426302153866, 113.56272239922441, 110.83380466732025, 87.97629623711427, 105.8760484887415, 96.99070378738345, 99.09399050836899, 92.82413044277216, 100.93970711973046, 107.02659819369836, 107.50500446875644, 97.93907559674305, 111.98798008302234, 108.42819553951662, 99.55857666566092, 97.6106032027037, 102.38173631459348, 82.64766428855506}, 0.8042015223755451, 30.82081757955685, 0.42744037541849256},
  {{0.650339376526493, 1.8815142239020468, -0.9958551543445624, 0.984412176354195, 0.8617661856148774, -0.6503163034475975, 0.10380692014651541}, {1.7443732297292902, 1.4067309833586263, 2.3329995627828364, -0.1281315631216473, 0.7322384703905425, 2.984136892211006, 2.1035973261386025}, -2.1878741035279607, 11.97640581693512, 0.04923736719645311},
  {{3.57727324032181, 0.587511532881994, -0.027921968824667187, -0.02461694828471367, -0.1520876089427612, -1.2252330255756967, -1.7038970844241061, 5.464578676849522, 1.5577217868000697, -0.4340654643839578, 3.8050544968124926, 0.9326942166530583}, {1.1557983687313775, 2.6113476443386086, 1.3356444854308205, 0.5749599651585495, 3.6615145041965733, -1.8901471637625782, 2.237652600868794, 3.0240483474190096, -2.6756890777377302, 2.0792425382139106, -1.6253656884076613, -2.4676606404166863, -0.11792640893308248, 1.8120529935180374, -1.433140172749613, -0.3314966702141963, -0.8158839464898366, 3.1505362138408075, -0.7069267739152878, 4.00519544764739, -1.3936283077559457, 0.018366881273333246, 1.9085018092043353, 1.0843743123608633, -2.6765041951248696, -3.158330890343098, 3.099328706240885, -2.3687403014361355, 1.8665611818158148, 2.5565830937037206, 2.586158437829943, -0.7456089150987524, 1.1063911611717738, 4.462463975507377, 2.0902013708746545, -2.194550323458792, 1.6628150021279093, -0.26447714063960875, 0.47905602774883516, -1.8019576726114763, 1.874534743513587, 0.7514381358898563, 3.5270340847863517, -0.7770182654988862, 2.175811443741607, 1.411067486915055, 0.17488729383497945, 0.17723103692394865, 0.8259540207214287, -0.08763077051631074, 0.055090463527695394, -2.6777903499752354, 0.8072998399071722, 0.2012249037245273, 0.6595442614617885, -0.2072496211118771, -0.557160872849146, 1.084375838890351, 0.13267992651977112, -2.0098244124495177}, 0.7959033804355321, 14.476030824590316, 0.43894551239973145},
  {{1.0005828904256733, 1.02221570177397, 1.0029736466967802, 0.9932696766342475, 0.9927747268378382, 1.020330968982596, 0.9951731421533607, 0.998091574710182, 0.9984342136581512, 0.9903520662119148, 0.993901919491795, 0.9991718835663355, 1.0004973822688654, 0.9816846201798358, 0.9897653450751671, 0.9965075810945063, 0.9883145885668219, 1.0003250982110807, 1.0041102179211503, 1.0005073075860982}, {1.2230462052163864, 1.212360218847614, 1.2166786519627482, 1.2225426458690383, 1.1844133324622919, 1.195110499812156, 1.2135599368478378, 1.2366516405146486, 1.1989884182000592, 1.1675515546999147, 1.198429739032614, 1.2215188208733703, 1.2042128532037844, 1.1858520802257222, 1.1738948589812042, 1.247209668309992, 1.204099256369225, 1.1956611495416452, 1.1977133158196391, 1.2190713773324995}, -41.83661126947642, 27.220352400230095, 3.035473031472933e-26},
  {{-22.0482163586714, -19.848937660862056, -8.981696374073348, -3.875909983021762, 10.57493034287054, -6.395874814926863, 2.8785919379353766, -20.614968856547286, -2.7397483397026288, 8.208307725278235, 2.1106026365045913, -3.486345469883366, -11.221625684584186, -9.399837183550302, 7.543808340182634, -3.8644288756965195, -1.8173279917257794, -16.271003697395038, -7.4815023239679626, 0.8030151073165026, -4.110397136955285, -6.397510693774203, -15.659322832536063, 10.090281523049253, -21.068816284238927, 12.823520600116009, -0.3249110324763782, 3.9767601829896844, -11.213038595817832, 19.532316408455902, -18.002673710318895, -9.39583672536125, 13.781869930523314}, {-5.059116203432975, -9.01827163822482, 18.324190279781476, -8.899749773860892, 2.794710002596783, 7.001445117003981, 15.686995681880152, -0.7014230610483434, -3.279427297861986, 11.020425885532834, 3.26916688657323}, -1.9986020018371051, 19.965957342284177, 0.05945200711208161},
  {{2.669763046373925, 5.565345082018601, 0.928340901244489, -1.0199696787837182, 4.301868324234745, -6.824457619141207, -2.062495058275847, 3.2198581718630117, -2.8024829973247725, -3.3955338024820145, 3.2612524112592833, 1.1871731743569605, 4.059426490101143, 0.33029483237484336}, {-0.3486152390036217, -0.0866589760391511, -0.05527743407400513, 0.20095170128054887, -0.47383951531829244, -0.09776691443909018, -0.27132458953941596, -0.18943526298157579, -0.4142939131029816}, 0.9167605034389252, 13.143398488609929, 0.37578345620537},
  {{5.8372033300768535, 7.906849235553546, 7.403546641212525, 6.2018422022289, 7.626240660221089, 6.9558355776706735, 8.969931474402712, 6.843622222096256, 5.593387764514303, 7.668571740826448, 7.536284669228813, 7.167747821426346, 6.392200599275863, 5.3431223735273035, 7.638887752297784, 5.623023121782239, 6.826211422721423, 7.37142756215625, 7.016792696820488, 7.455587146447551, 6.488730378011143, 8.050564742855492, 7.30472907601703, 5.758184208494059, 6.8641934751735185, 7.2327067223124635, 6.150380718168494, 9.159092907495506, 7.094772052713508, 6.959632164313545, 6.952491059878875, 7.474376449922736, 7.629784646671411, 7.011890918547459, 6.391301135499801, 6.486720371578907, 8.204348034331986, 7.881368021119884, 7.769208826004989, 7.881060042516993, 5.466675592828357, 7.00371410516577, 5.0360522002162025, 6.895813226985562, 8.324226520557623, 8.633913083999108, 7.001205854070964, 7.764253210342505, 5.7532846198810015, 7.28769611509634, 8.107458862737094, 6.475949891960817, 7.980342467891257, 8.195376968072262, 6.425170413947117, 9.527561174838365, 7.781183934703764, 8.09268229995649, 5.7189476369995145, 6.11431853952724, 7.684959796579855, 7.234742650096252, 6.8762613335733755, 7.962464466309274, 7.14637101853353, 7.0354670387751534, 5.456710433368736, 6.581263847510512, 8.74605495511645, 5.468312676988074, 8.374071564563792, 6.792239276096932, 5.69666879720931, 7.25062906117474, 7.037302036704388, 7.379812471210032, 5.986951725670344, 7.04358360666449, 7.084027044945752, 7.732588328994138}, {5.868154677440457, 7.041500379889615, 8.00752763642512, 7.6563823946026455, 7.022955000111392, 7.914652377451635, 5.553365302033738, 7.1028492969020665, 8.070715996677146, 8.135021225356367, 8.069008829763684, 7.933621653397083, 8.197561951022324, 6.355316653397616, 8.594889385923128, 7.218863285669714, 7.723203591469552, 9.216013018695742, 6.927806827410688, 6.054237460285885, 7.28389850041402, 8.1521819621306, 6.617936445546331, 8.299920361959087, 8.340774531111002, 5.5235424747929525, 7.3356287431547065, 6.135191199453688, 6.496139636048674, 7.570419756414224, 6.535994266986802, 6.907959172586708, 6.250066587888942, 7.9056304196505565, 7.013961574572249, 7.227592815864966, 6.38729869571028, 8.266334410763958, 7.637322798941496, 5.1508602570877775, 8.693076038810863, 6.962058510828618, 6.7105480999422795, 6.223545965565974, 7.456442559236184, 8.04129855986324, 7.170908291875274, 8.41014822987605, 8.019191092591571, 7.268331318567046, 8.042101561602175, 6.994717024537423, 5.767730709520188, 7.49597291172989, 7.657334749439276, 7.358312662055429, 5.940958892560924, 5.32115161590192, 5.555276145052737, 5.255549221927264, 7.73050636784588, 8.314928945192019, 6.233887818476878, 6.651670773561737, 6.396230243126081, 5.569577130804287, 6.175761921480159, 7.843861563940383, 8.416048576754033, 6.233410662039963, 8.16675196002754, 8.328816089950779, 5.689673827071935, 6.142902547030071, 6.594729853433808, 8.59741396670616, 6.24629326658534, 7.681039943471869, 7.327973457412456, 6.342347399291015}, -0.20147824938766212, 157.85415926065352, 0.8405840302263223},
  {{1.0, 2.0, 2.0, 3.0, 3.0, 3.0, 4.0, 9.0}, {2.0, 2.0, 2.0, 2.0, 5.0, 5.0, 5.0}, 0.08455166967098965, 12.14690804850019, 0.9339953979097804},
};
inline const std::vector<TwoSampleCase> levene_mean = {
  {{0.3070712888960241, 0.21182307273137244, 0.2777687608881369, -0.7106053841033004, 1.598932710178652, -1.334089379762712, -0.1218822937351199, -0.6952722255568115}, {0.3053263401747925, -1.5131226427944053, -0.5126769264734352, -0.5831625236999018, -0.7389654896316042, -0.7566096203449317, 1.0936244095462577, -1.1687928052688477}, 0.058790731233439086, 14.0, 0.8119336103335688},
  {{0.26404105982407133, -0.031263392905030996, 0.9120774773718044, 1.9698978482069318, 0.0006050985617404026}, {2.6035189861631816, 0.9104021256148523, -3.469171705599165, 2.3389959453270515, -1.3760967784833147, 1.133712578143773, -0.6931611708542078, -0.4184952367879418, -2.4822264858395156, -0.1617167978370223, -1.990631046782949, 4.704263245622362}, 3.9713974110263215, 15.0, 0.06479840777420869},
  {{1.175718377002218, 1.5406832483721289, 4.178067561258058, -2.563902680492497, -0.6626895956354302, 0.7940986790507384, 0.7638446628772849, -1.9036981256991927, -1.3197867754855042, -2.574907990671141, -1.8653397076407738, 1.8191336897700663, -0.896074246298617, 2.3006978242987906, 1.0871187705311847, 1.1854378108361714, 3.658036714162019, 1.9143703684700433, 0.40131272528572937, -0.06188642335635141, 1.620297297416434, -1.2779563772598803, -4.238567899009202, -0.20793251901471346, 1.4455074758966444, -1.1894730345946551, -0.6725997261309337, 0.32677121101242884, -1.624120091966389, 2.4633009625085514}, {0.5633022375153365, 1.189237274603689, 1.0914834111908585, 1.1917631844124592, 0.9233168931651077, 1.265360998883761, 0.9504477509599504, 0.5181281044817041, 0.9969369467210427, 0.5154755142284527, 0.48744718132421594, 1.3498760354677823, 0.24970401343209703, 0.8216004441414675, 1.1220679021338194, 1.275195187911606, 0.259303360707435, 0.8124510119854265, 0.9847257070548405, 1.0488425021008403, 1.711275430368015, 1.4917370229704083, 1.5539572600790028, 1.7985663890956367, 1.6856492859809034, 1.1838517278810983, 0.6680644748321135, 1.0360311065970014, 0.988714559362074, 0.7154380707742406}, 39.31930291283646, 58.0, 4.86053252428121e-08},
  {{-1.7929465933053894, -0.7140266083759645, -1.6767896624020362, -0.8466945730639865, -2.1383853087515936, -0.7705630266949, 0.570319932756872, -0.3098332930319251, 0.6565937888231086, -0.26962871929311516}, {2.1170776629114085, 1.3799115507402242, -1.105894810310549, 1.3730302648271628, 1.5913381346959223, 0.3366268408285663, 3.0229139935632325, 1.2774983666304633, 4.910507536976574, 2.3517825313865988, 6.477016564545088, 5.336803274944103, 1.5179062304108173, 4.435560556980546, 1.3852342408984597, 4.953266764400067, -0.09656801492059919, 2.2705610100453932, -0.629230784056513, 0.22374576484569886, 7.015943071158584, 2.5716469720978314, 2.181401388526378, -6.473353294326259, 1.4420320804576312, 0.2998676086677632, 0.04120643452696693, 1.9449224889558583, -0.6034761583894761, 3.5065204448988747, -2.4433134478064042, -0.4775292809357732, 3.297367848137834, -3.082409423716916, 1.8708260445778953, 4.348189836416682, -3.738752864377676, -1.1589281346450622, 5.0845615604534515, -5.449874575266117}, 5.69028650434131, 48.0, 0.02105427352246435},
  {{2.97161867421845, 3.040549313855054, 2.988381138523926, 3.043887169830191, 2.8941961064291517, 3.0134837723322794}, {2.994010165808657, 2.962833453727422, 3.1941892181130576, 3.144428743671975, 2.9089807552036246, 2.9519166648709003}, 5.194922010259109, 10.0, 0.04584513261544934},
  {{7.884399315102502, 7.210992741988516, 8.215098766906841, 9.147847395546906, 11.698648939939023, 11.673956503534427, 13.520393508887237, 10.757644130947984, 0.43896825746284307, 14.058405372247794, 19.01365998627133, 6.920290924944393, 9.936494287479087, 12.54860832632839, 13.162558532878306, 9.061935769642785, 6.688098525457682, 13.15180162986374, 7.938893618840009, 13.55185592033685, 8.695848096418091, 13.737642078000468, 15.45857618575733, 8.48837983366467, 8.022244245033846}, {8.872351454211662, 8.61721906798542, 8.04241807147887, 9.555287899464602, 8.604959077149184, 9.901379277490989, 9.822454182265407, 8.790398873816777, 8.272558036344385, 8.816000676990182, 10.20825199005619, 7.178786993099928, 8.990131207627307}, 14.301003493274125, 36.0, 0.0005671565954679568},
  {{0.06742102921582732, 0.2827163479708106, 1.4578408507572922, 0.6399643101034816, -1.6698153900513242, 0.28160269749732697, 0.4570325458936992, 0.9260135195067063, 0.49774621277003966}, {0.8314521031185489, -0.7997660146107278, 0.9469646462295863, -0.2838535223546985, 1.4515765806862422, -0.917877174972682, 0.30925163211077206, -0.6960509486166806, 0.9583251949223608}, 1.084381325416728, 16.0, 0.31319988037194557},
  {{4.539421170676506, 3.312171770609495, 3.0468778341065166, 4.824282387732343, 3.41742623109342, 1.7497288339032009, 2.5016444796076724, 0.26199451431292564, 4.171056206492259, 2.8716851190260457, 1.9385661163627292, 1.1035397209932944, 2.572061547769909, 3.060528622159001, 1.5792937001379068, -2.9923667094425976, 2.4276956993949024, -0.3865437155775706, 2.2708040644612364, 6.04812790112705, 0.3082532482933207, 3.271157636648097, -0.6275767605934437, 2.0211769871292007, 3.168187599617888, 2.4335926694776986, 3.2658040140355475, 2.608012488133083, 0.4222304132264758, -1.2148414708401019, 0.5741126520760176, 2.561445336910142, 1.3837676625379147, 1.5570371158442944, 3.411946738527976, 2.6505599202870638, -0.31011673710807663, 2.189321205648209, 0.6731145683043394, 1.7262535598702846, -0.33458725832361313, -0.9499968859215748, 1.7870206372456587, 2.084587630383876, 1.2131555769737612, 2.5474784669261217, 3.8819717468900325, 4.810429814740331, 3.811585650312705, 2.7833379049647933}, {2.0774567997723454, 1.9396166535101544, 2.731112263589428, 1.1554630840190108, 2.5413871115036084, 2.4209376595581005, 2.82235030704489}, 4.509163567444187, 55.0, 0.03822723434313161},
  {{-3.059277907677009, -2.55672025886427, -2.02612480927929, -2.1735451557999874, -3.734341898010204, -5.4056141433489735, -3.883711384480349, -2.4495092675217727, -1.614429141373384, -3.0672925994369296, -3.042709820996968, -2.9657225000310397, -3.797317091854525, -3.219973604544682, -3.9266746281936746}, {-2.320064606651115, -3.860131305836606, -3.50333242782539, -3.1657189970616515, -3.2611051671928295, -3.0655970498152807, -4.713632337838082, -1.7621261556211707, -3.7756170986591036, -3.9713198126422444, -3.1240674094883683, -2.775455044866231, -2.9438587200598816, -3.441070336790393, -3.2504613976844}, 0.9984923081488627, 28.0, 0.3262333758779159},
  {{97.19147426688814, 104.70326066275922, 101.39533633394178, 93.23693996472288, 100.42083602115359, 110.66118514473013, 100.20816723739075, 99.63591088336872, 99.89253942948973, 101.36354628912844, 103.07253963177658, 102.2038919725582, 105.52860869075839, 107.27450381588025, 97.65538387676463, 98.53474893874208, 99.09710715010262, 106.04739808581017, 100.92170696294289, 106.6024009023885, 98.38454003802177, 105.17650425516555, 99.0613879852111, 106.51006292777376, 99.58724772117283, 107.1671358334671, 102.16791915990143, 101.94813285001119, 97.87437084066012, 98.53638197976703, 98.88676582844724, 99.64459482695622, 91.4346929378836, 101.15249908994043, 104.41570173987046, 99.06083810612947, 104.39655546840058, 106.10894915482194, 98.01240098499204, 95.03778047446075}, {101.80599599098393, 92.81136660606845, 107.28777772481467, 101.87369824489103, 99.98416968750986, 109.21297497218008, 97.15620749447868, 103.33532175664868, 96.50081557014458, 94.58928842449839, 89.00245768456202, 112.17567627070036, 83.4345802044836, 110.7880399137711, 97.19145263833613, 102.70894704424464, 79.78563144527081, 118.83722984880201, 95.26308726776138, 108.23400959669614, 95.96383394967236, 117.61985693165195}, 18.520312998563906, 60.0, 6.301416628891836e-05},
  {{-0.39744779950569664, 0.061059500959115276, 1.0487244756978513, 0.41400134272894307, -0.7397208873710831, 0.2750666749864165, -1.0074370288435694}, {2.502300880200421, 3.853634715327425, 1.0176704621650754, 3.092363146547663, 0.9785523287081892, 1.5490260581000457, 3.131575748034966}, 3.1623952357702545, 12.0, 0.1006770498056203},
  {{-4.292784293164871, 0.661961783945326, 0.10135457322281194, -0.2770168557424581, -1.1201040270883251, -1.487163715632007, -0.4270277944693512, 6.035085637436846, 0.4238890199469465, 1.8353985347202326, -1.2953667663810913, -4.294965757166833}, {1.3605416646265127, -0.3896830435636764, 0.7656933973357349, -1.055464931318358, 0.8384967280013247, 0.11605463507368144, 1.4416274474373327, 3.3510473469475817, -0.0020083173385940234, 2.489095982597792, -3.225167617955229, 3.056121045645462, 2.502247151916194, 2.0106533198782737, -0.45374463111149427, -4.064655693972171, 1.297231206392528, 2.31001437554812, -0.010393840379870178, 1.689674970911464, -0.4681309581669913, 2.7566516005604167, 0.7397298696339127, 0.23250215490015447, -2.030087149295244, -1.339853445365754, -0.9819816259457044, -1.143223838154329, -0.8624149820312204, 2.8314206302553604, 0.35157856133972354, -2.696432926499807, 0.7186705441605353, 2.5567771296614348, -0.9250621645204415, -2.1722344853451565, -0.24183910337077225, -1.4846681669986888, -0.1016538413412037, 1.3060229095243854, 2.103087083466851, -0.5822092836171413, -2.5253973122875726, -1.982687253131654, -0.7944554205275891, 1.5832755911087837, 1.253820486431705, -1.4427820816701173, 0.8595118934170296, -3.233135938969052, 0.21673231776989033, -3.054984467899605, 0.9158802684813241, 2.2923080328793333, 0.24164357756325033, -2.1225856157821656, -1.5364450911204985, -1.4745972825284392, 2.725972052912853, 2.1949146508219526}, 0.5632001958511658, 70.0, 0.4554889483296968},
  {{0.9948945385494731, 1.0031307789415893, 1.0123377401907194, 0.9829934226086681, 0.9909815983544201, 1.0007748541501618, 1.000191849482731, 0.9805913641470169, 1.0002817714511913, 1.0006840046326846, 1.004549091633149, 0.9847515954429685, 1.0004950563424282, 1.0038896061323532, 0.9976518595472865, 0.9954819301153632, 1.0022121248837974, 1.003456652826425, 1.0098757868197652, 1.0026846245466423}, {1.1692515040001465, 1.2140480349596967, 1.1781164789501832, 1.1947108834389404, 1.2087456748620684, 1.2257486880036297, 1.2072779924183732, 1.1634111401171636, 1.2302915667318035, 1.196797664897476, 1.1703942016644373, 1.2269061340126688, 1.1802940917781959, 1.1942245873121788, 1.2212222361155332, 1.1878383002415518, 1.2196867546497487, 1.1926979345998363, 1.1881696355074722, 1.1885817315094955}, 16.585432543284465, 38.0, 0.0002275820905576926},
  {{-0.829379942711495, -18.382473868578, -3.4885627160325723, -20.814683781796344, 2.1765150366016055, -10.396547754617183, -21.773460842291513, -4.920898475939301, 0.30277477619562543, 1.2084989350452968, 7.65156340545763, 0.16007847180668122, -6.649144776162885, -9.314636475765415, -12.313425004991714, -20.400320193405364, -4.307336112550759, -8.491699776447675, 7.130494279772039, -15.403469959744553, -6.347266548433707, -2.27915380045578, -4.035364222302846, -10.007489597103495, -19.68545659453838, -22.33529753971313, 10.483876024515805, -2.465052826722169, 5.511629987513961, -2.0501663287346874, 12.827107409300407, -14.346099696009915, -6.085337142865242}, {11.602973463098587, -11.331983067146204, 0.8276026960080172, 21.566566623974698, 7.010594617181436, 18.533154417817236, -9.006097033580186, 4.995023046893677, 1.388105738616419, 17.5772032154332, -15.611001782876674}, 1.3916729721129224, 42.0, 0.24476186606842806},
  {{-4.583789290823942, -3.9719382227264486, 4.178791140433892, 3.7292699448047166, -4.328115086922063, -2.4509930589549516, -2.6995056566735265, 4.062784260087395, -3.4570370366815246, 0.5309560242332886, -3.4799169619942836, -1.5574173205858082, 2.625912996535741, -4.966838479614788}, {0.3657415124618693, -0.10305634694934476, 0.10567329293675114, -0.1603893239214596, -0.2784119775715112, -0.3215838479389271, -0.29815127118235735, 0.3199999731103369, 0.031809866981719226}, 29.313123447845342, 21.0, 2.269556894641723e-05},
  {{7.952244534982353, 7.61463920561572, 6.197913962003907, 7.087429104333029, 7.44417321782075, 5.6631007742861605, 6.3753584155460965, 6.443944473248662, 7.637313491765132, 7.192965309287537, 5.725228283936659, 7.732928205642217, 8.007415859006317, 6.54602844006658, 6.963413424226177, 8.069451295923534, 8.28357165791021, 7.155338868039125, 8.36092350779351, 7.6804600959511, 5.942167062122456, 6.241817951210484, 6.484615275837358, 7.397663831773404, 7.363982089336173, 7.899584570719433, 7.627218778983696, 7.5317476848382725, 6.784374809814046, 7.8790687800248955, 7.701862728897697, 5.267090175491561, 8.635517525420909, 6.778506767023042, 7.932568839696492, 7.773152968715215, 7.445761686391915, 6.470240648043537, 7.795358182578188, 7.327372291925854, 6.708614451695059, 7.245213297953706, 8.216583718424388, 8.69689016867128, 6.3267926964130075, 4.845202440567148, 7.778738095360267, 4.894546342773952, 6.885298660689249, 7.656215480001103, 8.424412348394679, 7.4277585999267375, 7.765159909572384, 7.814492515442872, 9.04880002907468, 8.188144938425847, 6.178684020839346, 6.326447867173803, 6.237492683090061, 6.06344544854028, 8.169501826721989, 5.862819456189968, 7.907606843137559, 7.332671951324381, 7.381260156906048, 7.6129955429511735, 6.580790517558773, 8.99874946584099, 5.961736152338132, 6.456814088683926, 8.051401853782634, 6.889080077987194, 7.033510178974245, 6.217351256850634, 5.432083430174028, 5.9800774145623015, 8.219252538386671, 5.660739209819154, 6.820414888290467, 7.281777754296281}, {6.055790462027618, 7.328259094124835, 7.604309190527449, 7.045804346356998, 6.524057633329707, 5.404236206924159, 7.870691572762319, 6.915138651624124, 7.950053290978925, 6.076643773110164, 6.858084403691212, 5.609229586378261, 6.780828753743263, 7.036717568809554, 5.752916189313759, 7.1817995679421935, 7.253025274779592, 8.04262984417604, 7.79019000607411, 6.989745417781204, 9.055017672991795, 5.041073194714915, 7.495281552740751, 7.678749204279575, 6.939534302585335, 8.756561263419016, 8.15050715922819, 7.74835616242169, 8.24580829221367, 5.261561896495744, 7.363369239853967, 7.240171853294362, 6.954977995844583, 7.115544174581989, 5.918304316367092, 6.898350969425562, 7.283773203940238, 7.5930821716144985, 6.047932088662263, 7.532296296861461, 6.470812348184617, 6.47533728689458, 7.67147928111595, 6.582846953859979, 7.221737468929614, 6.6195968964430625, 6.769437352029926, 8.959809481150089, 8.044879863577775, 7.9853449895724555, 8.225430293932437, 6.781054900707102, 7.76413038547139, 7.901075608197928, 7.400005632604267, 7.309919726596789, 8.760678482611256, 5.445651624313457, 8.293841143614758, 6.362597253747484, 7.687025254367271, 8.627228920312087, 6.400110241090406, 6.358628894778165, 7.087932811320853, 6.602812188623696, 6.6783593746551295, 6.618863679875502, 8.062138127690996, 5.7668593749121575, 8.368136944183158, 5.461407658626951, 8.019220077698233, 7.991907069571946, 6.531276603763496, 8.181030471889116, 6.85768557209443, 6.4571491167701005, 8.434234204542909, 8.548805267216899}, 0.11388697904828912, 158.0, 0.7362094429803152},
};
inline const std::vector<TwoSampleCase> levene_median = {
  {{0.3070712888960241, 0.21182307273137244, 0.2777687608881369, -0.7106053841033004, 1.598932710178652, -1.334089379762712, -0.1218822937351199, -0.6952722255568115}, {0.3053263401747925, -1.5131226427944053, -0.5126769264734352, -0.5831625236999018, -0.7389654896316042, -0.7566096203449317, 1.0936244095462577, -1.1687928052688477}, 0.11260535584173689, 14.0, 0.7421729206752615},
  {{0.26404105982407133, -0.031263392905030996, 0.9120774773718044, 1.9698978482069318, 0.0006050985617404026}, {2.6035189861631816, 0.9104021256148523, -3.469171705599165, 2.3389959453270515, -1.3760967784833147, 1.133712578143773, -0.6931611708542078, -0.4184952367879418, -2.4822264858395156, -0.1617167978370223, -1.990631046782949, 4.704263245622362}, 3.364621664891981, 15.0, 0.08652362247243649},
  {{1.175718377002218, 1.5406832483721289, 4.178067561258058, -2.563902680492497, -0.6626895956354302, 0.7940986790507384, 0.7638446628772849, -1.9036981256991927, -1.3197867754855042, -2.574907990671141, -1.8653397076407738, 1.8191336897700663, -0.896074246298617, 2.3006978242987906, 1.0871187705311847, 1.1854378108361714, 3.658036714162019, 1.9143703684700433, 0.40131272528572937, -0.06188642335635141, 1.620297297416434, -1.2779563772598803, -4.238567899009202, -0.20793251901471346, 1.4455074758966444, -1.1894730345946551, -0.6725997261309337, 0.32677121101242884, -1.624120091966389, 2.4633009625085514}, {0.5633022375153365, 1.189237274603689, 1.0914834111908585, 1.1917631844124592, 0.9233168931651077, 1.265360998883761, 0.9504477509599504, 0.5181281044817041, 0.9969369467210427, 0.5154755142284527, 0.48744718132421594, 1.3498760354677823, 0.24970401343209703, 0.8216004441414675, 1.1220679021338194, 1.275195187911606, 0.259303360707435, 0.8124510119854265, 0.9847257070548405, 1.0488425021008403, 1.711275430368015, 1.4917370229704083, 1.5539572600790028, 1.7985663890956367, 1.6856492859809034, 1.1838517278810983, 0.6680644748321135, 1.0360311065970014, 0.988714559362074, 0.7154380707742406}, 36.83716164989187, 58.0, 1.0470851802667767e-07},
  {{-1.7929465933053894, -0.7140266083759645, -1.6767896624020362, -0.8466945730639865, -2.1383853087515936, -0.7705630266949, 0.570319932756872, -0.3098332930319251, 0.6565937888231086, -0.26962871929311516}, {2.1170776629114085, 1.3799115507402242, -1.105894810310549, 1.3730302648271628, 1.5913381346959223, 0.3366268408285663, 3.0229139935632325, 1.2774983666304633, 4.910507536976574, 2.3517825313865988, 6.477016564545088, 5.336803274944103, 1.5179062304108173, 4.435560556980546, 1.3852342408984597, 4.953266764400067, -0.09656801492059919, 2.2705610100453932, -0.629230784056513, 0.22374576484569886, 7.015943071158584, 2.5716469720978314, 2.181401388526378, -6.473353294326259, 1.4420320804576312, 0.2998676086677632, 0.04120643452696693, 1.9449224889558583, -0.6034761583894761, 3.5065204448988747, -2.4433134478064042, -0.4775292809357732, 3.297367848137834, -3.082409423716916, 1.8708260445778953, 4.348189836416682, -3.738752864377676, -1.1589281346450622, 5.0845615604534515, -5.449874575266117}, 5.48559695714378, 48.0, 0.02336969538117134},
  {{2.97161867421845, 3.040549313855054, 2.988381138523926, 3.043887169830191, 2.8941961064291517, 3.0134837723322794}, {2.994010165808657, 2.962833453727422, 3.1941892181130576, 3.144428743671975, 2.9089807552036246, 2.9519166648709003}, 1.3613624273979645, 10.0, 0.27037175672761304},
  {{7.884399315102502, 7.210992741988516, 8.215098766906841, 9.147847395546906, 11.698648939939023, 11.673956503534427, 13.520393508887237, 10.757644130947984, 0.43896825746284307, 14.058405372247794, 19.01365998627133, 6.920290924944393, 9.936494287479087, 12.54860832632839, 13.162558532878306, 9.061935769642785, 6.688098525457682, 13.15180162986374, 7.938893618840009, 13.55185592033685, 8.695848096418091, 13.737642078000468, 15.45857618575733, 8.48837983366467, 8.022244245033846}, {8.872351454211662, 8.61721906798542, 8.04241807147887, 9.555287899464602, 8.604959077149184, 9.901379277490989, 9.822454182265407, 8.790398873816777, 8.272558036344385, 8.816000676990182, 10.20825199005619, 7.178786993099928, 8.990131207627307}, 13.128588948559177, 36.0, 0.0008902973375761749},
  {{0.06742102921582732, 0.2827163479708106, 1.4578408507572922, 0.6399643101034816, -1.6698153900513242, 0.28160269749732697, 0.4570325458936992, 0.9260135195067063, 0.49774621277003966}, {0.8314521031185489, -0.7997660146107278, 0.9469646462295863, -0.2838535223546985, 1.4515765806862422, -0.917877174972682, 0.30925163211077206, -0.6960509486166806, 0.9583251949223608}, 0.9779576643726383, 16.0, 0.337423813034031},
  {{4.539421170676506, 3.312171770609495, 3.0468778341065166, 4.824282387732343, 3.41742623109342, 1.7497288339032009, 2.5016444796076724, 0.26199451431292564, 4.171056206492259, 2.8716851190260457, 1.9385661163627292, 1.1035397209932944, 2.572061547769909, 3.060528622159001, 1.5792937001379068, -2.9923667094425976, 2.4276956993949024, -0.3865437155775706, 2.2708040644612364, 6.04812790112705, 0.3082532482933207, 3.271157636648097, -0.6275767605934437, 2.0211769871292007, 3.168187599617888, 2.4335926694776986, 3.2658040140355475, 2.608012488133083, 0.4222304132264758, -1.2148414708401019, 0.5741126520760176, 2.561445336910142, 1.3837676625379147, 1.5570371158442944, 3.411946738527976, 2.6505599202870638, -0.31011673710807663, 2.189321205648209, 0.6731145683043394, 1.7262535598702846, -0.33458725832361313, -0.9499968859215748, 1.7870206372456587, 2.084587630383876, 1.2131555769737612, 2.5474784669261217, 3.8819717468900325, 4.810429814740331, 3.811585650312705, 2.7833379049647933}, {2.0774567997723454, 1.9396166535101544, 2.731112263589428, 1.1554630840190108, 2.5413871115036084, 2.4209376595581005, 2.82235030704489}, 4.091660084463537, 55.0, 0.0479677772851167},
  {{-3.059277907677009, -2.55672025886427, -2.02612480927929, -2.1735451557999874, -3.734341898010204, -5.4056141433489735, -3.883711384480349, -2.4495092675217727, -1.614429141373384, -3.0672925994369296, -3.042709820996968, -2.9657225000310397, -3.797317091854525, -3.219973604544682, -3.9266746281936746}, {-2.320064606651115, -3.860131305836606, -3.50333242782539, -3.1657189970616515, -3.2611051671928295, -3.0655970498152807, -4.713632337838082, -1.7621261556211707, -3.7756170986591036, -3.9713198126422444, -3.1240674094883683, -2.775455044866231, -2.9438587200598816, -3.441070336790393, -3.2504613976844}, 0.8498847376519829, 28.0, 0.36446074762743275},
  {{97.19147426688814, 104.70326066275922, 101.39533633394178, 93.23693996472288, 100.42083602115359, 110.66118514473013, 100.20816723739075, 99.63591088336872, 99.89253942948973, 101.36354628912844, 103.07253963177658, 102.2038919725582, 105.52860869075839, 107.27450381588025, 97.65538387676463, 98.53474893874208, 99.09710715010262, 106.04739808581017, 100.92170696294289, 106.6024009023885, 98.38454003802177, 105.17650425516555, 99.0613879852111, 106.51006292777376, 99.58724772117283, 107.1671358334671, 102.16791915990143, 101.94813285001119, 97.87437084066012, 98.53638197976703, 98.88676582844724, 99.64459482695622, 91.4346929378836, 101.15249908994043, 104.41570173987046, 99.06083810612947, 104.39655546840058, 106.10894915482194, 98.01240098499204, 95.03778047446075}, {101.80599599098393, 92.81136660606845, 107.28777772481467, 101.87369824489103, 99.98416968750986, 109.21297497218008, 97.15620749447868, 103.33532175664868, 96.50081557014458, 94.58928842449839, 89.00245768456202, 112.17567627070036, 83.4345802044836, 110.7880399137711, 97.19145263833613, 102.70894704424464, 79.78563144527081, 118.83722984880201, 95.26308726776138, 108.23400959669614, 95.96383394967236, 117.61985693165195}, 18.32229521358408, 60.0, 6.822187032420733e-05},
  {{-0.39744779950569664, 0.061059500959115276, 1.0487244756978513, 0.41400134272894307, -0.7397208873710831, 0.2750666749864165, -1.0074370288435694}, {2.502300880200421, 3.853634715327425, 1.0176704621650754, 3.092363146547663, 0.9785523287081892, 1.5490260581000457, 3.131575748034966}, 2.0792560052832814, 12.0, 0.17489921657215324},
  {{-4.292784293164871, 0.661961783945326, 0.10135457322281194, -0.2770168557424581, -1.1201040270883251, -1.487163715632007, -0.4270277944693512, 6.035085637436846, 0.4238890199469465, 1.8353985347202326, -1.2953667663810913, -4.294965757166833}, {1.3605416646265127, -0.3896830435636764, 0.7656933973357349, -1.055464931318358, 0.8384967280013247, 0.11605463507368144, 1.4416274474373327, 3.3510473469475817, -0.0020083173385940234, 2.489095982597792, -3.225167617955229, 3.056121045645462, 2.502247151916194, 2.0106533198782737, -0.45374463111149427, -4.064655693972171, 1.297231206392528, 2.31001437554812, -0.010393840379870178, 1.689674970911464, -0.4681309581669913, 2.7566516005604167, 0.7397298696339127, 0.23250215490015447, -2.030087149295244, -1.339853445365754, -0.9819816259457044, -1.143223838154329, -0.8624149820312204, 2.8314206302553604, 0.35157856133972354, -2.696432926499807, 0.7186705441605353, 2.5567771296614348, -0.9250621645204415, -2.1722344853451565, -0.24183910337077225, -1.4846681669986888, -0.1016538413412037, 1.3060229095243854, 2.103087083466851, -0.5822092836171413, -2.5253973122875726, -1.982687253131654, -0.7944554205275891, 1.5832755911087837, 1.253820486431705, -1.4427820816701173, 0.8595118934170296, -3.233135938969052, 0.21673231776989033, -3.054984467899605, 0.9158802684813241, 2.2923080328793333, 0.24164357756325033, -2.1225856157821656, -1.5364450911204985, -1.4745972825284392, 2.725972052912853, 2.1949146508219526}, 0.5626240180845291, 70.0, 0.45571867430981317},
  {{0.9948945385494731, 1.0031307789415893, 1.0123377401907194, 0.9829934226086681, 0.9909815983544201, 1.0007748541501618, 1.000191849482731, 0.9805913641470169, 1.0002817714511913, 1.0006840046326846, 1.004549091633149, 0.9847515954429685, 1.0004950563424282, 1.0038896061323532, 0.9976518595472865, 0.9954819301153632, 1.0022121248837974, 1.003456652826425, 1.0098757868197652, 1.0026846245466423}, {1.1692515040001465, 1.2140480349596967, 1.1781164789501832, 1.1947108834389404, 1.2087456748620684, 1.2257486880036297, 1.2072779924183732, 1.1634111401171636, 1.2302915667318035, 1.196797664897476, 1.1703942016644373, 1.2269061340126688, 1.1802940917781959, 1.1942245873121788, 1.2212222361155332, 1.1878383002415518, 1.2196867546497487, 1.1926979345998363, 1.1881696355074722, 1.1885817315094955}, 13.201051509368812, 38.0, 0.0008240732030956603},
  {{-0.829379942711495, -18.382473868578, -3.4885627160325723, -20.814683781796344, 2.1765150366016055, -10.396547754617183, -21.773460842291513, -4.920898475939301, 0.30277477619562543, 1.2084989350452968, 7.65156340545763, 0.16007847180668122, -6.649144776162885, -9.314636475765415, -12.313425004991714, -20.400320193405364, -4.307336112550759, -8.491699776447675, 7.130494279772039, -15.403469959744553, -6.347266548433707, -2.27915380045578, -4.035364222302846, -10.007489597103495, -19.68545659453838, -22.33529753971313, 10.483876024515805, -2.465052826722169, 5.511629987513961, -2.0501663287346874, 12.827107409300407, -14.346099696009915, -6.085337142865242}, {11.602973463098587, -11.331983067146204, 0.8276026960080172, 21.566566623974698, 7.010594617181436, 18.533154417817236, -9.006097033580186, 4.995023046893677, 1.388105738616419, 17.5772032154332, -15.611001782876674}, 1.2927310275857054, 42.0, 0.2619906834690885},
  {{-4.583789290823942, -3.9719382227264486, 4.178791140433892, 3.7292699448047166, -4.328115086922063, -2.4509930589549516, -2.6995056566735265, 4.062784260087395, -3.4570370366815246, 0.5309560242332886, -3.4799169619942836, -1.5574173205858082, 2.625912996535741, -4.966838479614788}, {0.3657415124618693, -0.10305634694934476, 0.10567329293675114, -0.1603893239214596, -0.2784119775715112, -0.3215838479389271, -0.29815127118235735, 0.3199999731103369, 0.031809866981719226}, 9.667025646691693, 21.0, 0.005309445306259047},
  {{7.952244534982353, 7.61463920561572, 6.197913962003907, 7.087429104333029, 7.44417321782075, 5.6631007742861605, 6.3753584155460965, 6.443944473248662, 7.637313491765132, 7.192965309287537, 5.725228283936659, 7.732928205642217, 8.007415859006317, 6.54602844006658, 6.963413424226177, 8.069451295923534, 8.28357165791021, 7.155338868039125, 8.36092350779351, 7.6804600959511, 5.942167062122456, 6.241817951210484, 6.484615275837358, 7.397663831773404, 7.363982089336173, 7.899584570719433, 7.627218778983696, 7.5317476848382725, 6.784374809814046, 7.8790687800248955, 7.701862728897697, 5.267090175491561, 8.635517525420909, 6.778506767023042, 7.932568839696492, 7.773152968715215, 7.445761686391915, 6.470240648043537, 7.795358182578188, 7.327372291925854, 6.708614451695059, 7.245213297953706, 8.216583718424388, 8.69689016867128, 6.3267926964130075, 4.845202440567148, 7.778738095360267, 4.894546342773952, 6.885298660689249, 7.656215480001103, 8.424412348394679, 7.4277585999267375, 7.765159909572384, 7.814492515442872, 9.04880002907468, 8.188144938425847, 6.178684020839346, 6.326447867173803, 6.237492683090061, 6.06344544854028, 8.169501826721989, 5.862819456189968, 7.907606843137559, 7.332671951324381, 7.381260156906048, 7.6129955429511735, 6.580790517558773, 8.99874946584099, 5.961736152338132, 6.456814088683926, 8.051401853782634, 6.889080077987194, 7.033510178974245, 6.217351256850634, 5.432083430174028, 5.9800774145623015, 8.219252538386671, 5.660739209819154, 6.820414888290467, 7.281777754296281}, {6.055790462027618, 7.328259094124835, 7.604309190527449, 7.045804346356998, 6.524057633329707, 5.404236206924159, 7.870691572762319, 6.915138651624124, 7.950053290978925, 6.076643773110164, 6.858084403691212, 5.609229586378261, 6.780828753743263, 7.036717568809554, 5.752916189313759, 7.1817995679421935, 7.253025274779592, 8.04262984417604, 7.79019000607411, 6.989745417781204, 9.055017672991795, 5.041073194714915, 7.495281552740751, 7.678749204279575, 6.939534302585335, 8.756561263419016, 8.15050715922819, 7.74835616242169, 8.24580829221367, 5.261561896495744, 7.363369239853967, 7.240171853294362, 6.954977995844583, 7.115544174581989, 5.918304316367092, 6.898350969425562, 7.283773203940238, 7.5930821716144985, 6.047932088662263, 7.532296296861461, 6.470812348184617, 6.47533728689458, 7.67147928111595, 6.582846953859979, 7.221737468929614, 6.6195968964430625, 6.769437352029926, 8.959809481150089, 8.044879863577775, 7.9853449895724555, 8.225430293932437, 6.781054900707102, 7.76413038547139, 7.901075608197928, 7.400005632604267, 7.309919726596789, 8.760678482611256, 5.445651624313457, 8.293841143614758, 6.362597253747484, 7.687025254367271, 8.627228920312087, 6.400110241090406, 6.358628894778165, 7.087932811320853, 6.602812188623696, 6.6783593746551295, 6.618863679875502, 8.062138127690996, 5.7668593749121575, 8.368136944183158, 5.461407658626951, 8.019220077698233, 7.991907069571946, 6.531276603763496, 8.181030471889116, 6.85768557209443, 6.4571491167701005, 8.434234204542909, 8.548805267216899}, 0.030424541883189375, 158.0, 0.8617537302892218},
};
inline const std::vector<JsdCase> jsd = {
  {{1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 1.0, 1.0}, 0.0},
  {{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, 1.0},
  {{0.40367336866490366, 0.7933555319535077, 0.7743478182958086, 0.06370834105117451, 0.2813587256468165, 0.9177733544103972, 0.26973726957973876, 0.23397114625048432, 0.3037325757193087, 0.25096759782281697}, {0.7637592625402096, 0.8252362564442886, 0.24243617252814398, 0.017706789427213154, 0.06433065371041125, 0.15164721086898525, 0.8224437625297396, 0.29178243486905764, 0.22624892789084117, 0.970724280256464}, 0.16242877898815616},
  {{0.9668542647553369, 0.37142132221266244, 0.2760388542571777, 0.8866006112208239, 0.4831145948596447, 0.36079037739937125, 0.0631240255728613, 0.22002037007740533, 0.00845319279566955, 0.5029977199184796, 0.2644190015659046, 0.14184756333085, 0.05927718679681358, 0.0007274900535231877, 0.14979702568798903, 0.006074370725482818, 0.8089390683593605, 0.7765778672429218, 0.0005495400367800198, 0.8175843316200264}, {0.4882007211081684, 0.41496315799230643, 0.9366554260569263, 0.22632912907516023, 0.025433227397513688, 0.32864168530590504, 0.22101497070988319, 0.8745528462581449, 0.3879188881883648, 0.2047099282027009, 0.2195440281393034, 0.5672721532713931, 0.07561070019465836, 0.07766407021658556, 0.4396703934114985, 0.27060487327667976, 0.0631306698111126, 0.9313499130061488, 0.927713762781224, 0.7205511741221481}, 0.25209256886844233},
  {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, 0.5},
  {{3.0, 1.0, 0.0, 0.0, 2.0}, {21.0, 7.0, 0.0, 0.0, 14.0}, 0.0},
  {{0.024020055332274914, 0.33641285258998077, 0.09096838951793162, 0.042282419498722024, 0.2702845978142576}, {0.6687710182665826, 0.45241216092138614, 0.8635083436920369, 0.3670318372144664, 0.37653962515988926}, 0.195247360665231},
  {{0.612704883568847, 0.414659358197791, 0.6307915126618988, 0.64339414916606, 0.24850481591300488, 0.7708430051273758, 0.8608104044978667, 0.5118579204787618, 0.9922449846774929, 0.5109321757694919, 0.7944850555120068, 0.19058621154970934, 0.5542039372151109, 0.9838903390403712, 0.8422537311595502, 0.6869699307795847, 0.49868167928842344, 0.8370763359975265, 0.7518360751126912, 0.8769691124264012, 0.06508770381193252, 0.39729046056559014, 0.14851767376167524, 0.5990537170862218}, {0.7786708689700417, 0.31859490041639393, 0.4419516299526933, 0.9581188924097076, 0.653484321362249, 0.912039978695433, 0.20708754716362598, 0.01853237472950553, 0.07792025906523714, 0.6743448475971057, 0.6516790425117378, 0.6559963836073999, 0.7511531132213283, 0.4200250529877073, 0.5567534737644041, 0.7503738418293133, 0.6813450304477698, 0.5460402522612035, 0.6190788880927689, 0.8097888228951053, 0.35100914852361353, 0.22523968610885436, 0.645429148860946, 0.4919096450852134}, 0.09326934974391202},
  {{1.0, 1e-09, 1e-09}, {1e-09, 1.0, 1e-09}, 0.999999967659952},
  {{0.06835040799349507, 1.5706595100653336, 1.2818857279229077, 0.011972526136886926, 0.22893434107404068, 0.14697805919873289, 0.10575813580801942, 0.7461667258017584, 1.10485647893996, 1.2937785264706905, 1.033636389056666, 3.4706415597552787, 0.06642568484023012, 0.9617645561705798, 0.8293619286892684, 0.16282812718205217}, {1.7195631660863164, 0.927708850664025, 1.0545991999720221, 1.5216045912252387, 0.11830139601391775, 0.2274920098330019, 5.932572137160672, 0.49718511241450897, 0.8996511183768777, 0.11669199127346482, 2.1421238974187835, 0.8004289439551009, 1.9336582355552938, 1.3777877786189692, 1.0608246109015664, 5.664911581000106}, 0.4099011750958234},
};
inline const std::vector<TwoSampleCase> spearman = {
  {{0.8524727336767007, -0.6879699507003519, 1.3294760101134697, 1.7349665976650606, -0.6252777441546647, -0.13917715991268456, 0.8160034114860026, -2.0091700413663345, -0.2007416573433276, -0.19515682335473297, -0.01923580341731369, -0.9050844246568736}, {0.1400730814486298, 0.9451551579954955, 1.1175013126029971, 1.3682216248109318, -1.816353985438787, -0.04930097961923637, 1.6724680309519546, -0.6627072939928098, -0.2675571254048006, -0.8360404356972054, 0.5687028264827015, -2.3798928473187893}, 0.7202797202797203, 0.0, 0.008239768712338441},
  {{-0.39944202384418115, 0.7321583669972257, 0.03765352616024488, -0.4898601068787229, 0.21047370826966086, 1.78994408928631, 1.2129801158455205, 0.2252240242946435, 1.8814066786661143, 0.1434040691942328, 0.4036784683369145, 0.08983671176878727, 0.09398683678037191, -1.0644649916153595, -0.39501327029613886, 0.32198893446270604, 0.7783932085000403, 1.2438658516332843, -0.20271139095522456, -1.2310355793964536, 1.0287330764960536, 0.23795563776549106, 0.09092395755872534, 0.07886268037518092, 2.1662153319338118, 0.9850103120644603, 0.6347857581190548, 1.3144372078629665, -0.44219205927716726, -0.6034473956627573}, {-0.0342457371814211, 0.4123613347387789, -1.0592529762180851, -0.33905630448704527, 0.3333576109107651, 1.5578418421461433, 0.9090152950729868, 0.9909804763467271, 0.32477868034130675, 0.46377596793457354, 0.3584060279064569, 0.5487690346438123, 0.2907173870131248, 0.35508036844733615, 1.0886699726204345, 0.8289768840588608, -0.4036959057604807, 1.2155687617827975, 0.26068483204922227, -0.15454871638135015, 1.0072797456978406, -0.5271398241239457, -0.12214797066586858, 1.2850769458215199, 1.0635626382383425, 1.016119957010524, -0.9516113035153411, 1.555222809735323, -0.4703323163395223, -0.32996624708007455}, 0.4914349276974415, 0.0, 0.005817189851129163},
  {{1.0, 2.0, 2.0, 3.0, 4.0, 4.0, 4.0, 5.0}, {2.0, 1.0, 3.0, 3.0, 5.0, 4.0, 6.0, 7.0}, 0.9200335844703181, 0.0, 0.001202943728136136},
  {{0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0}, {9.0, 8.0, 7.0, 6.0, 5.0, 4.0, 3.0, 2.0, 1.0, 0.0}, -0.9999999999999999, 0.0, 6.646897422032013e-64},
  {{0.2833846225614015, 2.3091305484624143, 0.0005967990117198603, 0.06891567984098403, 0.04586859197925807, 0.5625155979764757, 3.317872230052643, 0.9408118209264188, 1.2795064530154918, 2.152659698736469, 1.3169966872687142, 1.362937487765525, 0.3771229710444983, 0.5515226713641236, 1.5106319846217164, 4.511057092859412, 2.605651527638122, 0.021963852729952354, 0.6580406261980776, 1.128245079134268, 0.0756339716804831, 0.7377212156610475, 0.2654835214945769, 1.0376159725956533, 0.3362073303291614}, {1.1204777227120672, 0.7887584426968227, 0.6189184312710682, 1.2802123976960114, -0.08325313007233542, -0.5689124078851173, 1.9569040781463838, 0.017675021850042105, 1.9025490979091821, 1.2251048945184504, 0.4814725657016671, 1.1494905140700475, 0.2611333511750906, 0.9867104852572233, 0.47059642800762, 2.7272349715443887, 0.612398711134113, -0.38995907019262516, -0.1783614415924213, 0.8710411050202767, 0.0055333499098357344, 1.0539910912314712, 1.245759740988482, -0.6492863446573961, -0.7018713532785186}, 0.37615384615384617, 0.0, 0.06385210937441643},
  {{2.0, 3.0, 1.0, 0.0, 3.0, 1.0, 2.0, 4.0, 2.0, 4.0, 2.0, 3.0, 2.0, 3.0, 3.0, 0.0, 1.0, 0.0, 1.0, 4.0, 1.0, 3.0, 2.0, 2.0, 4.0, 1.0, 2.0, 3.0, 1.0, 2.0, 1.0, 1.0, 0.0, 1.0, 4.0, 1.0, 0.0, 4.0, 2.0, 0.0}, {4.0, 4.0, 1.0, 3.0, 2.0, 1.0, 2.0, 3.0, 2.0, 2.0, 4.0, 0.0, 0.0, 4.0, 1.0, 1.0, 3.0, 4.0, 0.0, 0.0, 1.0, 3.0, 4.0, 1.0, 2.0, 2.0, 2.0, 2.0, 1.0, 0.0, 0.0, 1.0, 2.0, 0.0, 0.0, 4.0, 2.0, 4.0, 2.0, 4.0}, 0.015770539600899542, 0.0, 0.9230561699581037},
  {{0.06056486567019697, -1.2359493172289224, 0.2393040909241669, 0.031277990084533566, -0.6454965275666114, -0.1242135702650443, 1.1678781241024225, -0.7395234987485887}, {-1.5090110676124362, 0.6025316644016072, 0.30153333424161133, 0.5545599473174879, 1.7638338055533875, -0.25089467148610844, -0.2632256650474837, 1.475757537985438}, -0.7380952380952381, 0.0, 0.03655276105286081},
  {{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 3.0, 3.0, 3.0, 3.0, 3.0, 3.0}, {0.6710256193935039, -0.07809796783930534, 1.6501606342558808, -0.6190442006012492, 0.45207130254057437, -0.03305343203415078, 0.36487345180142877, -0.2502438872107143, 0.19589314429933258, 0.8674006276229957, -0.3328763272758152, 0.814792836760406, -0.6813646273029786, -0.7608661225250395, -1.1621248991750324, 0.8813156352805154, -1.674297301641205, -0.3308489277021492}, -0.45901886062936975, 0.0, 0.055345956352441446},
};
inline const std::vector<OneSampleCase> skewness = {
  {{0.3561834204376543, -1.287220466026307, 1.445356702961608, -0.135626167798425, 1.2516367710081746, 0.7609031662458217, 0.5245323382814749, 0.2966951683360983, -0.5733322531712438, -0.7609417554354341, -0.6255301933922727, 0.0772856590199609, -2.253354953066563, -0.896727092659626, -0.8226782736419246, -1.450542498183654, 0.05396738279679219, -0.027218674194201584, 0.11015058992051058, -0.6453584156210641, -0.8043374498372793, 1.4725663504185844, -1.143262351303973, 0.6568744004729816, -1.2652847636944062, 1.02202371335537, -0.35831835861541583, 0.5869688185010264, 1.1945378374652489, 0.4313733782418545, 1.986532237577292, 0.2716223424130349, -0.20830646583999213, 0.7288180239534271, -0.13802273485520047, 0.3412489492826381, 1.3354190450886319, 0.377929927336895, 0.9845974894122724, 1.1069899689231917}, -0.26845370154037135},
  {{1.6808778659446226, 0.09806764089524032, 0.3574116282150215, 1.299296958499577, 1.8294393988917494, 1.0661863849572337, 7.498004581245688, 2.3119398312532082, 0.8447608469719863, 1.8181667041453686, 0.10230719755552074, 3.038999102546959, 0.5717803799496081, 1.0557869912584743, 0.6479577831356862, 0.7028823330521892, 0.6458569144429906, 0.6582091498644056, 1.9670686732480276, 0.2345395055551547, 0.4085629723559868, 0.9884509219717554, 2.256661502671124, 0.29426752259734734, 6.419268697284883}, 2.389549842925701},
  {{-0.4563428730513612, -1.8480390834110745, -0.42411489507997896, -0.7152510895276464, -0.9573949172249956, -0.5384699652269533, -1.4112991719305983, -0.6796118672753388, -1.6712917609518338, -2.205954593532775, -1.010988715851567, -0.12807166919501348, -1.7875266754232935, -0.05666715251821276, -0.5461095559061427, -0.5739983751725052, -0.6688216857420318, -0.5126793437571425}, -0.7890036471817848},
  {{5.000571396595793, 4.999584625271567, 4.998354697254762, 5.000570225144044, 5.000308548802123, 5.000496426447516, 5.000475780265132, 5.000801424030667, 4.999992185330087, 4.9989384354948605}, -1.250795881612562},
  {{1.0, 2.0, 3.0, 4.0, 100.0}, 2.232395911636458},
};
inline const std::vector<CiCase> mean_ci = {
  {{5.171098510019657, 2.6309285447019968, -0.1040984996021801, 1.1259554267581042, 2.203802896458698}, 0.95, 2.205537375667255, -0.2367425269682788, 4.647817278302789},
  {{3.260314486552425, 1.840938381983176, 4.177900071053558, 3.3673244261405464, 3.5865157064200988, 2.672819153692006, 0.6816163977877463, 4.215027215544672, 1.8494161306013683, 5.752997660045089, 0.6661731548362724, 4.342786413982008}, 0.95, 3.034485766553247, 2.050656438636843, 4.018315094469651},
  {{5.327610294752034, 0.618179826485302, 1.6214690243284686, -0.5488291194232473, 2.423011978307824, 1.0333639278900333, 8.061639477642412, 5.150266619202588, 5.088043402089401, -2.5292708364517775, 3.698794495381147, 2.468346836765328, 2.8172799047134465, 1.0654790387699264, 3.306542585619648, 2.974837863272251, 2.095564348799428, 2.267539847855049, 3.045921687267722, 4.534549045377838, 4.947773734753508, 4.544803734405781, 5.299215628829987, 6.26200209128722, 1.9702532002311635, 3.521753428947969, 2.594937471579824, 1.5235150951862406, 7.449212510080308, 2.554223790894081}, 0.99, 3.172934364494697, 2.035309402796549, 4.310559326192845},
  {{3.383896679008021, 5.671875979355912, 3.1126305879420895, 7.262079835876072, -0.7899387030053946, 4.370949388495699, 1.9229707166889682, 4.038495449598339}, 0.9, 3.621619991744963, 2.0033939018837374, 5.239846081606188},
  {{4.827059973654131, 2.4855289200552697, 6.200125367227697, 4.747267393442373, 0.64753781903726, 7.18766471151961, 4.336207771854985, 1.3125720028734118, 5.508264797774531, 3.1112034719914488, 4.887044301181547, 1.8279145943535147, 4.1686529888982164, 1.9383398808137968, 1.9856489304202232, 2.2768483406764846, 4.749966412393292, 4.297509336691243, 5.153804511998025, 4.596886666485961, 2.7084761796890766, 3.6535445794212524, 1.5842713437644522, 3.6061619194628194, 4.518738782391107, 1.9096796169451635, 7.05645944913111, 4.097851452496875, -0.35975239163950734, 5.078452771137975, 3.706788891284774, 5.615814192061106, 2.418557970710495, 6.1123560832876755, 0.5395864995210733, 0.8333617935567657, -0.7469967239685689, -0.3115584180674267, 3.981572567987831, 5.422421555564528, 4.703634848601972, -2.183614802593448, 6.049097921601339, 5.527322434633216, 3.653149587426702, 3.2279887848694417, 2.9986359650722996, -1.091047623748155, 4.674837067183503, 3.605489775423851, 5.769381718724789, 2.6562350280744034, 2.391618098586317, 0.6179786507662963, 3.424422557962093, -0.04888195224305569, -0.9459710318276735, 1.8318440175692534, 5.646406319186243, 2.952223626693802, 3.9107593528399605, 2.7374160477903526, -2.3765164757643067, 2.399015950480901, 1.7725181918253428, 0.6467948224837325, 4.768561167862526, 5.459520422464275, 2.8790017811208273, 2.9235959543080696, -0.4093392183857314, 4.664758121252867, 2.413177302694107, 0.6789650185123906, -0.6334110133842437, 4.712083555487162, 4.1312041474051675, 3.1406542828348787, 2.0111780777706953, 4.445455239519665, 4.722077405826769, 3.088394321914489, 3.729957645879889, 6.584794708035129, 0.32761641533429975, 0.9944984701674024, 5.2543371865873105, 0.4568251800297607, 1.6448896225591294, 2.728190263241159, 5.953852594269399, 3.490398733983323, 3.3950460610194546, 0.8530785389031754, 4.539970773260764, 2.9864980088117283, 3.8847670167158537, 3.9707680855715566, 2.8863979932773316, 5.592249408870456}, 0.95, 3.104925884634217, 2.6885291323526777, 3.5213226369157566},
};
inline const std::vector<OneSampleCase> silverman = {
  {{-1.188706276942156, -1.077375268974805, -0.6685869363589495, 2.717825938361419, -1.7830476453556465}, 0.2531900960195112},
  {{2.07750556224668, -0.27521090981344, 1.1432573073477117, 1.6296652105909308, -0.5070566147371709, -1.3062500344786792, -0.2855101388157011, 0.3846985386418844, -0.928400327211117, -0.0009389675866032065, -1.29164088952226, -0.7271795874612639, -1.8271309968359204, 0.8965392192451578, -0.24732023240701495, -1.6448614511320336, 1.3727064094827388, -0.6398982769848983, -0.2102934728544034, 2.4056668986585517}, 0.6069484205173155},
  {{0.503859489079859, -0.6873219433335445, 1.7813651960146406, 0.5387186176538161, 1.2018011929920678, 0.0823392752081714, 0.6462096538852317, -0.9856294469824349, -3.4969193054011596, -0.4398184063355467, 0.9474367053825532, -2.3839541889215745, 2.3702634853500575, -2.035561076111046, -2.599013051766407, 2.085806812296931, 0.34408308950600774, 1.912882788526507, 2.203379374984645, -0.7940708125811506, -0.204202944370687, 1.5197795932692415, 1.992782312695184, -0.4787047025306491, 0.8395110586814851, 1.79713067172208, 1.9071394649475528, 0.5103437033684697, -2.747009485045073, -0.05841419934931667, 3.1267176402884918, 1.0976463855759246, 0.4919747469487212, -2.0095295554070667, 0.9893228197578633, -1.8227267251362258, -0.32085969065509456, -0.021347273790721745, 1.9188169222310427, -1.133811954533111, 0.6561444419442268, -0.033939887011304404, -2.6096612342224454, -0.3132419527719746, 0.27750108022977993, -0.5948731543973658, -1.1497678931176536, 0.6729343964470775, -2.5855123141586915, -1.8829045579154942, 0.6130838906916887, -1.6077770936877034, -0.6891746990114694, 0.675372580926488, -1.0383338196893355, 0.19091140559211864, 0.4086435999769128, -2.452508932869063, -0.45320921775249357, -0.6884725416371169, -0.6176137057615461, 2.079114617886595, 1.3178777314829513, 0.6021770920754479, -2.7717757969848096, -1.2995462428360256, -0.8260812353469119, 1.7089017338588834, -2.1838087917704954, -0.12756671166752268, -0.9846369947161696, -0.7744072417014545, -0.3985630089134672, 0.009188028852639514, 1.7909028261264197, 2.16896871350721, -1.888066691244073, 1.5941273180721764, -0.6723075705774786, 4.125895205799688, 2.1963307912590952, 1.130717410635889, 0.06571142323516142, -0.2966398308996655, 0.47137100090992, -2.5046251178426058, -2.1327680134735445, 1.8703201380744598, 1.789532117574255, 0.01804293411858305, -0.04227243880061462, -1.15537340412159, 1.4906539459547288, -0.45537704702067405, 0.11378542848052353, 2.5281583884731673, 2.133626156619855, 3.062956232939836, -0.5217071694045143, -2.1796904221422704}, 0.5605843483357473},
};
} // namespace fixtures
