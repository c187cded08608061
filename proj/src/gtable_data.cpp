// Chebyshev data for the Mobius moment functions H_m(sigma), m = 1..9.
// Generated by tools/gen_moment_table; do not edit.
// Fixed-point residual 8.99e-15; truncation low 3.8e-15 high 4.49e-15;
// cross-validated against the integration-by-parts oracle.

namespace minq::gtable::data {

extern const bool has_data;
extern const double err_bound;
extern const int n_low;
extern const int n_high;
extern const double low[];
extern const double high[];

const bool has_data = true;
const double err_bound = 3.348752e-13;
const int n_low = 48;
const int n_high = 72;

const double low[] = {
    8.22207863678487971e-01,    -1.58346887256621632e-01,    1.71492481686823933e-02,    -2.01060286816196832e-03,
    2.48641192733670136e-04,    -3.19004547121443105e-05,    4.20229552819395558e-06,    -5.64648702572334571e-07,
    7.70557636956918095e-08,    -1.06489410299041385e-08,    1.48729241422618230e-09,    -2.09616597227994334e-10,
    2.97785129887984112e-11,    -4.25976846389156988e-12,    6.12907872602856177e-13,    -8.82858601040462940e-14,
    1.31561428418081050e-14,    -2.10479781751852581e-15,    2.68303897617746148e-16,    -8.60422844084496319e-16,
    -5.08852219619863381e-16,    -1.11022302462515654e-16,    -1.38777878078144568e-16,    1.52655665885959024e-16,
    -9.11308066046482529e-16,    -7.86407975776152467e-17,    -2.35922392732845765e-16,    -6.75385673313636863e-16,
    1.01770443923972679e-16,    9.80697005085554813e-16,    -2.63677968348474678e-16,    3.42318765926089900e-16,
    1.01770443923972676e-15,    4.16333634234433703e-17,    1.82492909672760106e-15,    -2.54426109809931697e-17,
    9.08995101411846917e-16,    -6.77698637948272572e-16,    -1.98452365651746732e-15,    1.78098276866952179e-16,
    -1.35539727589654514e-15,    7.91033905045424035e-16,    -2.13949228703806200e-16,    -6.04840251957246675e-16,
    -1.01076554533581953e-15,    -1.86598421899238523e-15,    4.76470714734962950e-16,    -4.42643606953415260e-16,
    6.92984521366545758e-01,    -2.58446684623885259e-01,    4.10978417206752378e-02,    -6.32869704904823194e-03,
    9.67790845398071699e-04,    -1.47813299420540556e-04,    2.25779512131133800e-05,    -3.45022526869002500e-06,
    5.27574003576318009e-07,    -8.07363462335120019e-08,    1.23674295110509647e-08,    -1.89661883883325990e-09,
    2.91221033399402529e-10,    -4.47752344460520606e-11,    6.89341176733175059e-12,    -1.06241867155650494e-12,
    1.64285252068907539e-13,    -2.56091444346869431e-14,    3.99217695938129153e-15,    -1.29526019539601590e-15,
    -4.53341068388605554e-16,    -1.15648231731787123e-16,    -1.85037170770859413e-17,    1.38777878078144568e-16,
    -9.11308066046482529e-16,    1.85037170770859413e-17,    -1.34151948808873074e-16,    -6.80011602582908381e-16,
    1.20274161001058617e-16,    9.52941429469925899e-16,    -3.60822483003175876e-16,    2.59052039079203160e-16,
    9.76071075816283393e-16,    -1.15648231731787129e-17,    1.74166236988071432e-15,    0.00000000000000000e+00,
    8.81239525796218004e-16,    -5.82867087928207184e-16,    -1.77404387476561466e-15,    1.45716771982051796e-16,
    -1.23512311489548665e-15,    7.27427377592941075e-16,    -2.17418675655759814e-16,    -5.30825383648902971e-16,
    -9.30968265440886408e-16,    -1.78503045678013450e-15,    2.04119129006604285e-16,    -4.57966997657877073e-16,
    5.96989481595047389e-01,    -3.21213421854939951e-01,    6.64566050808879927e-02,    -1.25747298359383895e-02,
    2.27922194128346578e-03,    -4.02430645779143004e-04,    6.97599997680301844e-05,    -1.19262419124947315e-05,
    2.01704978404493307e-06,    -3.38243024792609705e-07,    5.63371597567252635e-08,    -9.33263179236920593e-09,
    1.53928764642004734e-09,    -2.52991747921408663e-10,    4.14620745144607814e-11,    -6.77897552906851258e-12,
    1.10651302935120067e-12,    -1.80536141591858268e-13,    2.94902990916057206e-14,    -5.33369644747002262e-15,
    2.17418675655759814e-16,    -2.40548322002117234e-16,    6.93889390390722838e-17,    1.57281595155230493e-16,
    -9.39063641662111442e-16,    1.01770443923972679e-16,    -1.38777878078144568e-17,    -6.75385673313636863e-16,
    1.66533453693773481e-16,    9.57567358739197516e-16,    -4.20959563503705172e-16,    2.08166817117216851e-16,
    9.48315500200654479e-16,    -4.62592926927148517e-17,    1.67689936011091346e-15,    3.00685402502646542e-17,
    8.37293197738138825e-16,    -4.92661467177413215e-16,    -1.58900670399475530e-15,    1.24900090270330111e-16,
    -1.14723045877932829e-15,    6.93889390390722838e-16,    -2.09323299434534706e-16,    -4.66062373879102107e-16,
    -8.46545056276681862e-16,    -1.70118548877458876e-15,    -1.90819582357448780e-17,    -4.49871621436651940e-16,
    5.24132474341915011e-01,    -3.59856295742892240e-01,    9.05804684239902153e-02,    -2.01805400441565572e-02,
    4.20917898062531538e-03,    -8.40718451849571170e-04,    1.62669937128036735e-04,    -3.07084062924206647e-05,
    5.68398377449411998e-06,    -1.03537938600054914e-06,    1.86139339442004115e-07,    -3.31013343402020155e-08,
    5.83308582916922984e-09,    -1.02004373003783400e-09,    1.77218092053029354e-10,    -3.06174576432856757e-11,
    5.26452955303587536e-12,    -9.01639873873705255e-13,    1.53950926081355023e-13,    -2.66361007324652129e-14,
    3.88115465691877588e-15,    -8.69674702623039257e-16,    2.22044604925031308e-16,    1.29526019539601580e-16,
    -9.62193288008468936e-16,    1.57281595155230493e-16,    4.16333634234433703e-17,    -6.66133814775093924e-16,
    1.75785312232316444e-16,    9.62193288008468936e-16,    -4.94974431812048925e-16,    1.71159382963044950e-16,
    9.11308066046482529e-16,    -8.09537622122509936e-17,    1.61907524424501982e-15,    4.39463280580791110e-17,
    7.93346869680059745e-16,    -4.41776245215426857e-16,    -1.47798440153223964e-15,    9.94574792893369319e-17,
    -1.07784151974025601e-15,    6.46473615380690045e-16,    -2.16262193338441935e-16,    -4.19803081186387317e-16,
    -8.15320033709099334e-16,    -1.60924514454781798e-15,    -2.10479781751852586e-16,    -4.32524386676883869e-16,
    4.67681203086547648e-01,    -3.82794764317903824e-01,    1.12315839572706702e-01,    -2.85999980743179630e-02,
    6.71594700295555670e-03,    -1.49223134533227331e-03,    3.18050202766447410e-04,    -6.55933353339716030e-05,
    1.31707981947624484e-05,    -2.58692889766135937e-06,    4.98845096827404966e-07,    -9.47152558096927141e-08,
    1.77485772791715242e-08,    -3.28866546495110157e-09,    6.03475394655994535e-10,    -1.09807806366231845e-10,
    1.98336208567795325e-11,    -3.55932875765555902e-12,    6.35200225751475500e-13,    -1.13117848421495637e-13,
    1.93363843455548087e-14,    -3.65448412272447335e-15,    7.54026470891252085e-16,    4.62592926927148517e-17,
    -9.43689570931383059e-16,    1.94289029309402395e-16,    9.71445146547011973e-17,    -6.52256026967279467e-16,
    1.85037170770859407e-16,    9.71445146547011973e-16,    -5.45859653774035233e-16,    1.57281595155230493e-16,
    8.69674702623039257e-16,    -7.86407975776152467e-17,    1.57744188082157645e-15,    4.16333634234433703e-17,
    7.72530187968338060e-16,    -3.88578058618804789e-16,    -1.36233616980045237e-15,    9.02056207507939689e-17,
    -9.94574792893369269e-16,    5.99057840370657350e-16,    -2.33609428098210006e-16,    -3.61978965320493731e-16,
    -7.67904258699066541e-16,    -1.55778168142717277e-15,    -3.72387306176354573e-16,    -4.17779237131081009e-16,
    4.23076184619722961e-01,    -3.95445848387972643e-01,    1.31297372537135915e-01,    -3.73848020943807757e-02,
    9.71838422511878998e-03,    -2.37032038020096314e-03,    5.50532269911280236e-04,    -1.22940842040989790e-04,
    2.65806838428047261e-05,    -5.59384834664574272e-06,    1.15070746939856705e-06,    -2.32169513965837127e-07,
    4.60712972262985051e-08,    -9.01199903128683570e-09,    1.74094110886683718e-09,    -3.32649694826751332e-10,
    6.29490533772999048e-11,    -1.18104368877306830e-11,    2.19903724859212438e-12,    -4.06878234808042752e-13,
    7.41212646815370135e-14,    -1.37852692224290260e-14,    2.64140561275401801e-15,    -2.96059473233375061e-16,
    -8.78926561161582195e-16,    2.12792746386488320e-16,    1.43403807347416037e-16,    -6.52256026967279467e-16,
    2.17418675655759814e-16,    9.62193288008468936e-16,    -6.01370805005293060e-16,    1.52655665885959024e-16,
    8.23415409930324368e-16,    -1.04083408558608426e-16,    1.53349555276349747e-15,    5.31981865966220801e-17,
    7.28583859910258980e-16,    -3.63135447637811586e-16,    -1.27675647831893002e-15,    8.78926561161582220e-17,
    -9.27498818488932794e-16,    5.57424476947213980e-16,    -2.34765910415527861e-16,    -3.01841884819964434e-16,
    -7.34366271496848304e-16,    -1.49880108324396133e-15,    -4.86879055590823792e-16,    -4.11418584385832733e-16,
    3.87181308469055185e-01,    -4.01327959291313097e-01,    1.47557112186078865e-01,    -4.61984522439595757e-02,
    1.31182123059841536e-02,    -3.47414813258039180e-03,    8.71439231122197013e-04,    -2.09135168359871504e-04,
    4.83764281139544423e-05,    -1.08482433469105529e-05,    2.36923920626797013e-06,    -5.05839450372820968e-07,
    1.05902875950173809e-07,    -2.17970153639409255e-08,    4.41972690852961583e-09,    -8.84435538694994250e-10,
    1.74924519313890414e-10,    -3.42368309628563809e-11,    6.63837503485827532e-12,    -1.27649742627985075e-12,
    2.42889042212368622e-13,    -4.62639186219841252e-14,    8.85865455065489384e-15,    -1.46641957835906080e-15,
    -6.75385673313636863e-16,    1.89663100040130901e-16,    1.80411241501587938e-16,    -6.56881956236550887e-16,
    2.26670534194302777e-16,    9.57567358739197516e-16,    -6.38378239159465011e-16,    1.38777878078144568e-16,
    7.77156117237609578e-16,    -1.15648231731787123e-16,    1.47798440153223964e-15,    5.31981865966220801e-17,
    6.98515319659994258e-16,    -3.63135447637811586e-16,    -1.20505457464522193e-15,    6.93889390390722838e-17,
    -8.51170985545953282e-16,    5.38920759870128005e-16,    -2.30139981146256391e-16,    -2.54426109809931691e-16,
    -6.93889390390722838e-16,    -1.45196354939258754e-15,    -5.92697187625409025e-16,    -3.92914867308746807e-16,
    3.57805058456216907e-01,    -4.02747893703944926e-01,    1.61310568476183303e-01,    -5.48048341881808287e-02,
    1.68150457200400283e-02,    -4.79190165581506490e-03,    1.28827217591244436e-03,    -3.30114967599904664e-04,
    8.12444508172804891e-05,    -1.93198256143491572e-05,    4.46077094694297127e-06,    -1.00404458224882332e-06,
    2.21040522075758667e-07,    -4.77269839066485346e-08,    1.01304760783775070e-08,    -2.11792120415517806e-09,
    4.36831339619322025e-10,    -8.90115296285169117e-11,    1.79401123586349805e-11,    -3.58025646166974322e-12,
    7.07401729786264814e-13,    -1.39018426400146668e-13,    2.72189678203934201e-14,    -5.08852219619863362e-15,
    3.23815048849003950e-17,    6.47630097698007900e-17,    2.22044604925031308e-16,    -6.56881956236550887e-16,
    2.49800180540660222e-16,    9.71445146547011973e-16,    -6.56881956236550887e-16,    1.15648231731787123e-16,
    7.47087576987344856e-16,    -1.45716771982051796e-16,    1.44328993201270350e-15,    4.85722573273505986e-17,
    6.49943062332643659e-16,    -3.49257659829997129e-16,    -1.15416935268323552e-15,    6.70759744044365369e-17,
    -8.00285763583966973e-16,    5.10008701937181286e-16,    -2.26670534194302777e-16,    -2.11636264069170466e-16,
    -6.69603261727047538e-16,    -1.39124822773339929e-15,    -6.75385673313636863e-16,    -3.83952129349533271e-16,
    3.33391312431013942e-01,    -4.01231899041358198e-01,    1.72842407732717362e-01,    -6.30488242301248947e-02,
    2.07153456386434433e-02,    -6.30418606234703360e-03,    1.80472217233117638e-03,    -4.91018506465323856e-04,
    1.27947057784012303e-04,    -3.21268656494807099e-05,    7.81257104394417201e-06,    -1.84764686827580205e-06,
    4.26438753952281425e-07,    -9.63331852436392359e-08,    2.13522905282796175e-08,    -4.65333769202510174e-09,
    9.98855220757377538e-10,    -2.11501445986546800e-10,    4.42343615440303000e-11,    -9.14815908211371120e-12,
    1.87197479739609207e-12,    -3.79890563451112939e-13,    7.65221219722889145e-14,    -1.51082849934406698e-14,
    2.03540887847945353e-15,    -3.46944695195361419e-16,    3.23815048849003975e-16,    -6.75385673313636863e-16,
    2.63677968348474678e-16,    9.76071075816283393e-16,    -6.89263461121451319e-16,    1.29526019539601580e-16,
    6.93889390390722838e-16,    -1.57281595155230493e-16,    1.39009174541608129e-15,    5.08852219619863394e-17,
    6.12935628178471807e-16,    -3.46944695195361419e-16,    -1.10559709535588492e-15,    4.85722573273505986e-17,
    -7.40148683083437628e-16,    4.90348502542777406e-16,    -2.09323299434534706e-16,    -1.83880688453541552e-16,
    -6.40691203794100721e-16,    -1.35539727589654514e-15,    -7.32053306862212594e-16,    -3.62268085899823182e-16,
};

const double high[] = {
    2.98120697020780256e-01,    -3.28851957930610228e-01,    6.55518949126638606e-02,    7.46159108300094732e-03,
    -5.79294109595265491e-03,    4.37430677194347844e-04,    3.22924839563165015e-04,    -7.89880268230982638e-05,
    -8.31036852323256173e-06,    6.02295168182960962e-06,    -4.17771355704088521e-07,    -2.65449115802482724e-07,
    6.03211721498612412e-08,    3.37527927212693469e-09,    -3.02075912123673265e-09,    3.76796341041954143e-10,
    1.34331774099333887e-11,    -1.52000387585202491e-11,    7.57094078787348346e-12,    -1.91326275810076295e-12,
    -2.27475445887156015e-13,    2.61133707250375328e-13,    -4.68729993091048680e-14,    -1.05409508282466250e-14,
    5.78549553943553753e-15,    -1.60365548001411498e-16,    -3.08395284618099028e-16,    9.74529099393192854e-16,
    -3.08395284618099022e-18,    -8.94346325392487117e-17,    -1.60365548001411498e-16,    -4.62592926927148493e-16,
    -1.60365548001411498e-16,    -4.31753398465338600e-17,    5.58195465158759250e-16,    4.74928738311872509e-16,
    -1.34151948808873074e-16,    2.09708793540307341e-16,    -1.52655665885959024e-16,    8.48087032699772302e-17,
    6.26042427774740994e-16,    4.37921304157700608e-16,    -1.83495194347768917e-16,    1.52655665885959024e-16,
    -3.88578058618804789e-16,    1.36927506370435960e-15,    5.70531276543483167e-16,    -6.29126380620921974e-16,
    5.38149771658582834e-16,    8.75842608315401216e-16,    -9.86864910777916870e-17,    -7.57110423737433064e-16,
    1.58823571578321008e-16,    2.72621431602399529e-15,    -5.13478148889134900e-16,    -3.38463824868363701e-16,
    1.41090842712780302e-16,    3.16105166733551477e-16,    -6.24500451351650554e-17,    6.03683769639928869e-16,
    -1.00228467500882186e-17,    2.48258204117569732e-16,    5.93660922889840636e-17,    -1.71776173532281156e-15,
    3.89349046830350009e-17,    1.98143970367128619e-16,    -3.12250225675825277e-17,    4.06310787484345446e-16,
    3.58509518368540092e-17,    -1.61811150898058829e-15,    -2.46398195057216821e-15,    -3.76772301629518158e-16,
    1.51551723809214806e-01,    -2.23247069766572492e-01,    8.87026744182771998e-02,    -1.30287123681278594e-02,
    -4.17176249551323968e-03,    2.23365360284469121e-03,    -1.59493455735260997e-04,    -1.46293359647143342e-04,
    4.10642975805786126e-05,    2.66069862144927916e-06,    -3.17880038192614494e-06,    3.90408924346348941e-07,
    1.07681057863616573e-07,    -3.69671368423881294e-08,    2.13679248986211824e-09,    7.09356012201172618e-10,
    -2.65031834441783078e-10,    1.10655025266205410e-10,    -2.23611715563818182e-11,    -7.13761765740943832e-12,
    4.78835798172699226e-12,    -5.90354925438734617e-13,    -2.83082199656645475e-13,    1.23476846031817570e-13,
    -9.46002535566018750e-15,    -7.23186942429442211e-15,    3.08395284618099008e-15,    1.46487760193597041e-16,
    -2.42090298425207724e-16,    1.68075430116863971e-16,    -1.37235901655054053e-16,    -3.00685402502646530e-16,
    -1.69617406539954460e-16,    -1.54197642309049526e-17,    4.27127469196067131e-16,    2.48258204117569732e-16,
    -1.00228467500882177e-16,    2.43632274848298213e-16,    -1.29526019539601580e-16,    5.24271983850768353e-17,
    4.22501539926795662e-16,    3.05311331771918049e-16,    -1.58823571578321008e-16,    1.20274161001058617e-16,
    -2.92975520387194082e-16,    8.29583315622686327e-16,    3.87036082195714250e-16,    -2.93746508598739302e-16,
    4.00913870003528707e-16,    5.90576970043659583e-16,    -6.09080687120745534e-17,    -5.28126924908494528e-16,
    9.94574792893369319e-17,    1.79177660363115546e-15,    -4.69531820831055721e-16,    -2.08937805328762096e-16,
    5.31981865966220801e-17,    1.68075430116863971e-16,    -3.00685402502646542e-17,    3.28440978118275444e-16,
    1.27213054904965848e-17,    1.53426654097504269e-16,    1.58052583366775751e-17,    -1.00267016911459450e-15,
    6.12935628178471758e-17,    9.52170441258380728e-17,    -1.69617406539954454e-17,    1.71352130015931268e-16,
    6.26427921880513605e-17,    -9.22872889219661374e-16,    -1.46969627825812815e-15,    -2.78278557604612788e-16,
    9.09197669277843901e-02,    -1.46274777531900463e-01,    7.47979074704918090e-02,    -2.13703591313471677e-02,
    7.19929279367708232e-04,    1.91678159168251158e-03,    -6.38603307334771738e-04,    -2.96453552410690261e-06,
    5.44200897599288910e-05,    -1.19924998629311608e-05,    -1.33873831789952121e-06,    1.02400893728063173e-06,
    -1.17473943198054265e-07,    -2.47708414875659316e-08,    8.08843940898936261e-09,    -1.48047313451736696e-09,
    5.69695576207390090e-10,    -3.99111330404464395e-11,    -9.22659356324591759e-11,    3.58526557208015268e-11,
    9.21916863837345169e-14,    -3.65534300359213457e-12,    9.95527734322839260e-13,    5.11303962132577260e-14,
    -1.04237606200917465e-13,    2.69645417105834895e-14,    1.77173091013097885e-15,    -3.03152564779591333e-15,
    7.09309154621627735e-16,    2.40548322002117234e-16,    -2.22044604925031308e-16,    -1.80411241501587938e-16,
    -1.57281595155230493e-16,    -9.25185853854297066e-18,    3.65448412272447345e-16,    1.35693925231963563e-16,
    -9.17475971738844586e-17,    2.31296463463574246e-16,    -1.24900090270330111e-16,    3.46944695195361419e-17,
    3.06853308195008538e-16,    2.08937805328762096e-16,    -1.41090842712780302e-16,    7.86407975776152467e-17,
    -2.15876699232669325e-16,    5.35836807023947025e-16,    2.78326744367834355e-16,    -1.48029736616687531e-16,
    3.07624296406553759e-16,    4.09394740330526474e-16,    -3.16105166733551501e-17,    -3.63906435849356855e-16,
    5.47401630197125760e-17,    1.19965765716440524e-15,    -3.59280506580085337e-16,    -1.49957207145550655e-16,
    3.23815048849003950e-17,    9.02056207507939689e-17,    -2.27441522405848034e-17,    1.96601993944038129e-16,
    8.09537622122509875e-18,    9.21330912796570811e-17,    -8.48087032699772272e-18,    -6.33752309890193492e-16,
    5.04997278562137170e-17,    4.41390751109654222e-17,    -1.71544877068817566e-17,    8.59651855872950975e-17,
    6.37029009789260814e-17,    -5.51642065360624656e-16,    -9.39738256347213578e-16,    -2.06142973061910568e-16,
    5.87124478968820140e-02,    -9.84848321425493278e-02,    5.72788018870001719e-02,    -2.15406671537962148e-02,
    3.75476445641629566e-03,    8.23239434891049303e-04,    -6.76358460050794068e-04,    1.31906407132887130e-04,
    2.33179247961574123e-05,    -1.66977236450882282e-05,    2.16213688122394521e-06,    6.10765454077862428e-07,
    -2.27856246029346612e-07,    1.39298729256689634e-08,    9.45690073318584687e-10,    9.16211777742444560e-10,
    5.46518554177409687e-10,    -5.65520442203432676e-10,    1.02082004886187378e-10,    4.26858039655660524e-11,
    -2.39575057323390963e-11,    2.58619900186632086e-12,    1.56463499563959841e-12,    -7.30165927720349828e-13,
    8.23677545922249748e-14,    4.62754834451573061e-14,    -2.38065739960941539e-14,    2.93129718029503106e-15,
    1.47335847226296803e-15,    -6.51485038755734198e-16,    -3.00685402502646542e-17,    -8.24957386353414833e-17,
    -1.85037170770859407e-16,    -7.70988211545247555e-19,    3.40776789502999411e-16,    8.63506796930677200e-17,
    -8.24957386353414833e-17,    1.98914958578673864e-16,    -1.23358113847239621e-16,    2.69845874040836656e-17,
    2.45174251271388703e-16,    1.38006889866599323e-16,    -1.31067995962692094e-16,    4.47173162696243559e-17,
    -1.71159382963044950e-16,    3.58509518368540116e-16,    2.16647687444214569e-16,    -6.90034449332996613e-17,
    2.40933816107889869e-16,    2.90662555752558322e-16,    -1.15648231731787129e-17,    -2.44403263059843483e-16,
    3.97058928945802520e-17,    8.18789480661052949e-16,    -2.75242791521653376e-16,    -1.21045149212603862e-16,
    3.04540343560372767e-17,    5.28126924908494577e-17,    -2.42861286636752993e-17,    1.12564278885606144e-16,
    0.00000000000000000e+00,    4.24043516349886151e-17,    -2.89120579329467808e-17,    -4.34259110152860676e-16,
    2.56353580338794809e-17,    5.97515863947566845e-18,    -1.45524024929165491e-17,    5.02106072768842470e-17,
    6.48593832962439487e-17,    -3.37259155787824230e-16,    -6.19874522082379036e-16,    -1.65569718429341919e-16,
    3.96916358863262653e-02,    -6.82546087412839453e-02,    4.29177743550280474e-02,    -1.88557248960099996e-02,
    4.93204376455472042e-03,    -1.03138347974995566e-04,    -4.88815360397440706e-04,    1.81307620444600933e-04,
    -1.11564815560587378e-05,    -1.21507162904514575e-05,    3.82231517631229407e-06,    -4.10674480409865978e-08,
    -1.83116483817241040e-07,    1.95511208349473515e-08,    2.14290513574540588e-09,    3.35399229454506421e-09,
    -1.56080070087518919e-09,    -2.30294302146679287e-10,    3.06406047139656190e-10,    -6.39105897833521372e-11,
    -1.46491052313260338e-11,    1.12008350125789320e-11,    -2.17895223469315909e-12,    -3.93007385894132203e-13,
    3.72496786502393970e-13,    -9.27467978960470952e-14,    -9.04137875679111858e-15,    1.40481762025659556e-14,
    -4.08932147403599273e-15,    -2.42861286636752993e-16,    4.78783679369598758e-16,    -2.37464369155936255e-16,
    -1.67304441905318726e-16,    2.62135991925384176e-17,    3.46173706983816149e-16,    8.32667268468867405e-17,
    -6.47630097698007900e-17,    1.51499183568641145e-16,    -1.46873254299369651e-16,    2.96830461444920318e-17,
    2.15105711021124080e-16,    8.48087032699772302e-17,    -1.26442066693420601e-16,    3.70074341541718826e-17,
    -1.36079419337736198e-16,    2.54040615704159056e-16,    1.81953217924678428e-16,    -1.58052583366775751e-17,
    2.09323299434534706e-16,    2.18575157973077694e-16,    1.61907524424501975e-17,    -1.36850407549281443e-16,
    5.20417042793042128e-17,    5.70145782437710533e-16,    -2.25514051876984922e-16,    -1.07167361404789405e-16,
    4.68375338513737915e-17,    6.03298275534156259e-17,    -2.08166817117216851e-17,    5.24271983850768353e-17,
    -1.65762465482228230e-17,    -4.04768811061254937e-18,    -6.05225746063019309e-17,    -3.22080325373027167e-16,
    -1.61907524424501975e-17,    -2.44788757165616105e-17,    -1.16611966996218685e-17,    5.44510424403831061e-17,
    7.30029462806906237e-17,    -1.86530960430728330e-16,    -4.22019672294579893e-16,    -1.52980926537704676e-16,
    2.77482532082129786e-02,    -4.85228464075562541e-02,    3.21604204053161508e-02,    -1.56352319564137254e-02,
    5.05591413477878438e-03,    -6.77544118016350358e-04,    -2.65746868074420532e-04,    1.71071047487124817e-04,
    -3.22214871321622535e-05,    -5.21886192605418414e-06,    3.79304336419071636e-06,    -4.61793280261135752e-07,
    -1.25491515854762398e-07,    2.15152757018623025e-08,    1.08769415523013446e-08,    -4.52763504157596365e-10,
    -2.50433937399380868e-09,    7.66706983395475831e-10,    1.15956125488573620e-10,    -1.27832659581174180e-10,
    2.84799591317626729e-11,    3.63650159367839194e-12,    -4.29055209570804266e-12,    1.26323218860610902e-12,
    -4.05771095736263767e-15,    -1.56734964513244915e-13,    6.27025437744461226e-14,    -3.64831621703211119e-15,
    -7.27465927003518388e-15,    2.89313326382354130e-15,    -1.79254759184270058e-16,    -3.57353036051222261e-16,
    -1.34922937020418328e-17,    1.46487760193597047e-17,    3.87421576301486885e-16,    1.54583136414822124e-16,
    -2.27441522405848034e-17,    7.44003624141163877e-17,    -2.23201087242349163e-16,    3.27669989906730236e-17,
    2.13949228703806200e-16,    3.62364459426266378e-17,    -1.08323843722107285e-16,    7.63278329429795122e-17,
    -8.51941973757498527e-17,    1.88506617722813021e-16,    1.57667089261003128e-16,    2.46716227694479218e-17,
    2.13178240492260955e-16,    2.06432093641240044e-16,    7.03526743035038337e-17,    -1.31067995962692088e-17,
    1.07938349616334662e-16,    4.08431005066094887e-16,    -2.05853852482581092e-16,    -9.84937440249053696e-17,
    9.34823206498612657e-17,    1.31453490068464704e-16,    9.05911148565665944e-18,    1.90819582357448780e-17,
    -3.25742519377867062e-17,    -5.80168629187798790e-17,    -1.05336264402369452e-16,    -2.71869718096142896e-16,
    -7.43039888876732290e-17,    -7.11236625150490909e-17,    -7.70988211545247555e-19,    8.02791475271489075e-17,
    9.46388029671791330e-17,    -7.89299181569447228e-17,    -2.94975271060889557e-16,    -1.65497438284509544e-16,
    1.99199870250108303e-02,    -3.52614679888779564e-02,    2.42820735813543062e-02,    -1.26844488781039117e-02,
    4.69652451303934678e-03,    -9.68602039442070860e-04,    -8.20867458999599613e-05,    1.35607585195764694e-04,
    -4.05195275079266588e-05,    6.38368845141108553e-07,    3.02422920908034717e-06,    -6.84790119624843858e-07,
    -8.00283777580013123e-08,    3.99130848907790376e-08,    1.15045484940265759e-08,    -6.46490354883992073e-09,
    -7.88065351016288385e-10,    1.17767748832196962e-09,    -2.57114673302138996e-10,    -5.14423947112824802e-11,
    4.47451678332723219e-11,    -1.12797572208537620e-11,    -2.62027668081662059e-13,    1.47750291939412953e-12,
    -6.36337047869398934e-13,    7.27812871698713718e-14,    6.05576545699272424e-14,    -3.46728818496128736e-14,
    3.95748248986175539e-15,    2.88773634634272461e-15,    -1.69077714791872792e-15,    2.11250769963397831e-16,
    2.23586581348121779e-17,    -4.93432455388958435e-17,    5.29668901331585067e-16,    3.24586037060549244e-16,
    6.59194920871186696e-17,    -6.86179508275270266e-17,    -4.09394740330526474e-16,    2.27441522405848034e-17,
    2.33609428098210006e-16,    -1.96601993944038117e-17,    -7.15091566208217133e-17,    2.03540887847945358e-16,
    1.46487760193597047e-17,    1.45331277876279161e-16,    1.22587125635694352e-16,    3.73929282599445051e-17,
    2.59630280237862112e-16,    2.81217950161129067e-16,    2.09708793540307341e-16,    1.82145964977564745e-16,
    2.33609428098210006e-16,    3.07431549353667441e-16,    -2.13370987545147273e-16,    -8.90491384334760893e-17,
    1.95252764573833932e-16,    2.88542338170808881e-16,    8.77962825897150633e-17,    1.31067995962692088e-17,
    -3.08395284618099053e-17,    -1.13817134729367182e-16,    -1.68942791854852374e-16,    -2.60690389028736833e-16,
    -1.54872256994151600e-16,    -1.39163372183917178e-16,    2.12021758174943068e-18,    1.17623889023871839e-16,
    1.14588122940912427e-16,    -8.04718945800352094e-18,    -2.23225180623959947e-16,    -1.90337714725232987e-16,
    1.46156838667969823e-02,    -2.61157438895553741e-02,    1.85183763127352505e-02,    -1.02114156622720980e-02,
    4.16133909952104853e-03,    -1.07676982337126916e-03,    4.81551543423170461e-05,    9.51118819697841975e-05,
    -4.07045543787572239e-05,    4.68157715799328614e-06,    2.04979813799292015e-06,    -7.96858455316915905e-07,
    -1.94712186721290870e-08,    5.97950836002083773e-08,    7.69198499648046880e-10,    -8.71297902654215948e-09,
    1.80070600213263111e-09,    6.62081498036753317e-10,    -4.19151760753614713e-10,    6.88544476064774788e-11,
    1.70009615953049636e-11,    -1.39423268455088033e-11,    4.54457150923638470e-12,    -3.93500047361309616e-13,
    -5.02256415470093844e-13,    2.99843483375639153e-13,    -5.34715019176148689e-14,    -2.34970222291587356e-14,
    1.57848271490716246e-14,    -3.19921558380700482e-15,    -1.16573417585641437e-15,    9.02827195719484959e-16,
    -3.29211966329820713e-16,    -3.60436988897403204e-17,    8.02405981165716415e-16,    6.54376244549028909e-16,
    2.48836445276228635e-16,    -3.41547777714544680e-16,    -8.17247504237962410e-16,    -3.27669989906730236e-17,
    2.71773344569699762e-16,    -1.15648231731787123e-16,    -1.61907524424501975e-17,    4.70110061989714723e-16,
    2.21659110819258673e-16,    1.31838984174237339e-16,    4.10551222647844305e-17,    -1.15648231731787129e-17,
    3.25935266430753416e-16,    4.81674885162893371e-16,    5.14249137100680071e-16,    5.44510424403831061e-16,
    4.69531820831055721e-16,    2.47872710011797097e-16,    -2.62135991925384189e-16,    -8.04718945800352125e-17,
    3.55329191995915954e-16,    5.49714594831761482e-16,    2.18671531499520828e-16,    2.97794196709351843e-17,
    1.63834994953365110e-18,    -1.50149954198436972e-16,    -2.40837442581446685e-16,    -2.75290978284874943e-16,
    -2.57991930288328439e-16,    -2.42764913110309810e-16,    -3.56100180207461186e-17,    1.15648231731787123e-16,
    8.33149136101083199e-17,    -3.08395284618099022e-18,    -2.00059394205186352e-16,    -2.16394706937301269e-16,
    1.09227434831261072e-02,    -1.96638072483950078e-02,    1.42722500619397591e-02,    -8.21220729972843046e-03,
    3.59820253283127693e-03,    -1.07874255493782003e-03,    1.32289622800743981e-04,    5.84025492200886120e-05,
    -3.66135928485474110e-05,    7.12175023727101322e-06,    1.07519355525619328e-06,    -8.21046715742964473e-07,
    5.97459632018731332e-08,    6.36978529434410841e-08,    -1.34685311063698077e-08,    -6.10488251849098699e-09,
    3.27569168279448776e-09,    -1.93645934164364681e-10,    -2.97338770117851038e-10,    1.20188918424172592e-10,
    -1.84699834516250420e-11,    -3.48672961645066530e-12,    4.27812607870256808e-12,    -1.95848275868431512e-12,
    3.15933814603535572e-13,    1.83554560440057912e-13,    -1.34809216259215400e-13,    2.73880069857747139e-14,
    7.76153832562600669e-15,    -7.57553741959071658e-15,    1.75052873431348463e-15,    4.05539799272800225e-16,
    -8.26499362776505348e-16,    1.10444061303856714e-16,    1.22124532708767219e-15,    1.28330987811706452e-15,
    6.10044422385177096e-16,    -8.47508791541113400e-16,    -1.61714777371615675e-15,    -1.95831005732492884e-16,
    3.09744513988303200e-16,    -3.23815048849003975e-16,    1.92747052886311893e-17,    9.32895735969749483e-16,
    6.38763733265237645e-16,    2.09901540593193658e-16,    -1.13238893570708230e-16,    -2.33705801624653189e-16,
    3.16201540259994660e-16,    8.16380142499974006e-16,    1.11851114789926784e-15,    1.24389310580181382e-15,
    8.96948410606452402e-16,    1.97565729208469691e-16,    -4.01781231741517110e-16,    -1.33959201755986756e-16,
    5.18778692843508455e-16,    8.87021937382807328e-16,    3.67375882801310469e-16,    1.70581141804386010e-17,
    6.54858112181244678e-17,    -1.27164868141744278e-16,    -2.91337170437660409e-16,    -3.01504577477413367e-16,
    -3.67520443090975170e-16,    -3.83277514664431185e-16,    -1.87615162603213834e-16,    -4.45727559799596240e-17,
    -1.01674070397529520e-16,    -1.26935981016441761e-16,    -2.52089051793685148e-16,    -2.53010623640297827e-16,
};

}  // namespace minq::gtable::data
