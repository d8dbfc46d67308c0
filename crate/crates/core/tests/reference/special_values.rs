#![allow(clippy::excessive_precision)]
// Reference values evaluated at 60+ significant digits and rounded to 20.

pub const NORMAL_SF2: [(f64, f64); 33] = [
    (0.0, 1.0),
    (0.25, 8.0258734863415255152e-1),
    (0.5, 6.1707507745197379272e-1),
    (0.75, 4.5325470475373639865e-1),
    (1.0, 3.1731050786291410283e-1),
    (1.25, 2.1129954733371051538e-1),
    (1.5, 1.3361440253771613201e-1),
    (1.75, 8.0118313727634180838e-2),
    (2.0, 4.5500263896358414401e-2),
    (2.25, 2.4448945310089406305e-2),
    (2.5, 1.2419330651552270334e-2),
    (2.75, 5.9595264701091135086e-3),
    (3.0, 2.6997960632601890533e-3),
    (3.25, 1.1540500847815340858e-3),
    (3.5, 4.652581580710500727e-4),
    (3.75, 1.7683457040160773564e-4),
    (4.0, 6.3342483666239842508e-5),
    (4.25, 2.1377051549868840938e-5),
    (4.5, 6.7953462494601208034e-6),
    (4.75, 2.0341664851374063425e-6),
    (5.0, 5.7330314375838782335e-7),
    (5.25, 1.5209921032977428502e-7),
    (5.5, 3.7979124931775438768e-8),
    (5.75, 8.9243449078032237461e-9),
    (6.0, 1.9731752900753962814e-9),
    (6.25, 4.1045268504378777632e-10),
    (6.5, 8.0320011677182356167e-11),
    (6.75, 1.4784515556035644839e-11),
    (7.0, 2.5596250877716700088e-12),
    (7.25, 4.1677163173441388624e-13),
    (7.5, 6.3817833458217924555e-14),
    (7.75, 9.1892548715571909203e-15),
    (8.0, 1.2441921148543568247e-15),
];
pub const T_SF2: [(f64, u32, f64); 131] = [
    (0.1, 1, 9.3654896513889285747e-1),
    (0.5, 1, 7.0483276469913345165e-1),
    (1.0, 1, 5.0e-1),
    (1.5, 1, 3.7433408362199763237e-1),
    (2.0, 1, 2.9516723530086654835e-1),
    (3.0, 1, 2.0483276469913345165e-1),
    (4.0, 1, 1.5595826075473865092e-1),
    (6.0, 1, 1.051369134225068599e-1),
    (10.0, 1, 6.345103486110713903e-2),
    (20.0, 1, 3.1804502512352750363e-2),
    (50.0, 1, 1.2730698201945593359e-2),
    (0.1, 2, 9.2946543841414016922e-1),
    (0.5, 2, 6.6666666666666666667e-1),
    (1.0, 2, 4.2264973081037423549e-1),
    (1.5, 2, 2.7239312489100107944e-1),
    (2.0, 2, 1.8350341907227396727e-1),
    (3.0, 2, 9.546596626670913206e-2),
    (4.0, 2, 5.7190958417936634132e-2),
    (6.0, 2, 2.6671473215424771013e-2),
    (10.0, 2, 9.8524570233256908467e-3),
    (20.0, 2, 2.4906638923670969772e-3),
    (50.0, 2, 3.9976015988808058091e-4),
    (0.1, 3, 9.2665234880080582486e-1),
    (0.5, 3, 6.5144796484815099444e-1),
    (1.0, 3, 3.9100221895577064191e-1),
    (1.5, 3, 2.3058386524482305228e-1),
    (2.0, 3, 1.3932596855884317685e-1),
    (3.0, 3, 5.7668885622437308578e-2),
    (4.0, 3, 2.8008456010146166969e-2),
    (6.0, 3, 9.2727148922846674041e-3),
    (10.0, 3, 2.1283990584141500574e-3),
    (20.0, 3, 2.7320325024731172023e-4),
    (50.0, 3, 1.7617152041271974156e-5),
    (0.1, 4, 9.2515584093945328146e-1),
    (0.5, 4, 6.4332996318186327424e-1),
    (1.0, 4, 3.7390096630005888501e-1),
    (1.5, 4, 2.08e-1),
    (2.0, 4, 1.161165235168155945e-1),
    (3.0, 4, 3.9941968071718827276e-2),
    (4.0, 4, 1.613008990009253358e-2),
    (6.0, 4, 3.8825370469605104203e-3),
    (10.0, 4, 5.6200362271599115571e-4),
    (20.0, 4, 3.6883105802997326482e-5),
    (50.0, 4, 9.5744536569696984101e-7),
    (0.1, 5, 9.2423014115466037028e-1),
    (0.5, 5, 6.3829887164092900671e-1),
    (1.0, 5, 3.632174676491226256e-1),
    (1.5, 5, 1.9390368024247343213e-1),
    (2.0, 5, 1.0193947882985835625e-1),
    (3.0, 5, 3.0099247897462573847e-2),
    (4.0, 5, 1.0323415480831453804e-2),
    (6.0, 5, 1.846138289594014426e-3),
    (10.0, 5, 1.7094757574296359071e-4),
    (20.0, 5, 5.7755163732241720923e-6),
    (50.0, 5, 6.0477576266012252316e-8),
    (0.1, 9, 9.2253644795668120401e-1),
    (0.5, 9, 6.2907129982602647961e-1),
    (1.0, 9, 3.4343639613791351488e-1),
    (1.5, 9, 1.6785065605707482057e-1),
    (2.0, 9, 7.6552823770701041203e-2),
    (3.0, 9, 1.49563639104142148e-2),
    (4.0, 9, 3.1104283103858553863e-3),
    (6.0, 9, 2.0249932206764065473e-4),
    (10.0, 9, 3.578237431924735788e-6),
    (20.0, 9, 9.0795212999165441723e-9),
    (50.0, 9, 2.5689529108747981885e-12),
    (0.1, 10, 9.2232071856440831518e-1),
    (0.5, 10, 6.2789360574297294271e-1),
    (1.0, 10, 3.4089313230205987267e-1),
    (1.5, 10, 1.6450732644544018085e-1),
    (2.0, 10, 7.3388034770740365618e-2),
    (3.0, 10, 1.3343655022569577207e-2),
    (4.0, 10, 2.5183326247366922637e-3),
    (6.0, 10, 1.3210886035478560424e-4),
    (10.0, 10, 1.5895531755964119543e-6),
    (20.0, 10, 2.1460623172042518114e-9),
    (50.0, 10, 2.4743103293026799747e-13),
    (0.1, 29, 9.2103244448737374596e-1),
    (0.5, 29, 6.2084808419378136402e-1),
    (1.0, 29, 3.2558198801619354111e-1),
    (1.5, 29, 1.44423696040385748e-1),
    (2.0, 29, 5.4943637182967189248e-2),
    (3.0, 29, 5.4991921339034061524e-3),
    (4.0, 29, 4.0006394565249141956e-4),
    (6.0, 29, 1.5927908426174664629e-6),
    (10.0, 29, 6.599862576433512408e-11),
    (20.0, 29, 1.6418237431669114683e-18),
    (50.0, 29, 1.0748623985572457649e-29),
    (0.1, 49, 9.2075235258510345189e-1),
    (0.5, 49, 6.1931318621013137059e-1),
    (1.0, 49, 3.2222340595067559767e-1),
    (1.5, 49, 1.4003061863163548371e-1),
    (2.0, 49, 5.1059148257418093204e-2),
    (3.0, 49, 4.2358962301445846281e-3),
    (4.0, 49, 2.1348048914542496327e-4),
    (6.0, 49, 2.3404303906210658049e-7),
    (10.0, 49, 2.013163391978546767e-13),
    (20.0, 49, 3.2244149483734697252e-25),
    (50.0, 49, 1.0290051293705148331e-43),
    (0.1, 100, 9.2054453109585123216e-1),
    (0.5, 100, 6.1817356583088657198e-1),
    (1.0, 100, 3.197241557841233604e-1),
    (1.5, 100, 1.367650581246888568e-1),
    (2.0, 100, 4.8212178731133679601e-2),
    (3.0, 100, 3.407915343329449537e-3),
    (4.0, 100, 1.215236443007616772e-4),
    (6.0, 100, 3.1724915028028565796e-8),
    (10.0, 100, 9.9016889845941391754e-17),
    (20.0, 100, 9.9942678613369559334e-37),
    (50.0, 100, 1.4472163679761388752e-72),
    (0.1, 1000, 9.2036436902360412671e-1),
    (0.5, 1000, 6.1718508083387481464e-1),
    (1.0, 1000, 3.1755241808467230708e-1),
    (1.5, 1000, 1.3393003882208617211e-1),
    (2.0, 1000, 4.5770346493251640049e-2),
    (3.0, 1000, 2.7667090442381924642e-3),
    (4.0, 1000, 6.8009919208781577599e-5),
    (6.0, 1000, 2.7553691733774691126e-9),
    (10.0, 1000, 1.6670702958600066308e-22),
    (20.0, 1000, 4.0622884995247713137e-75),
    (50.0, 1000, 2.7586724123251649625e-274),
    (0.1, 10000, 9.2034633003107489385e-1),
    (0.5, 10000, 6.1708607932323341436e-1),
    (1.0, 10000, 3.1733470433042912398e-1),
    (1.5, 10000, 1.3364597182361961256e-1),
    (2.0, 10000, 4.5527260661435442738e-2),
    (3.0, 10000, 2.7064481899976662858e-3),
    (4.0, 10000, 6.379866882313963106e-5),
    (6.0, 10000, 2.0416184729226153193e-9),
    (10.0, 10000, 1.963280742866382894e-23),
    (20.0, 10000, 2.7646525865407732508e-87),
];
pub const QUANTILES: [(f64, f64); 22] = [
    (1e-300, -3.7047096299361199237e+1),
    (1e-100, -2.1273453560965324294e+1),
    (1e-20, -9.2623400897984075796),
    (1e-10, -6.3613409024040561991),
    (1e-06, -4.7534243088228989573),
    (0.0001, -3.7190164854556805523),
    (0.001, -3.0902323061678135354),
    (0.01, -2.3263478740408410931),
    (0.025, -1.9599639845400542118),
    (0.1, -1.2815515655446004353),
    (0.2, -8.4162123357291416552e-1),
    (0.3, -5.2440051270804081597e-1),
    (0.4, -2.5334710313579974132e-1),
    (0.49, -2.5068908258711058033e-2),
    (0.5, 0.0),
    (0.6, 2.5334710313579974132e-1),
    (0.75, 6.744897501960817432e-1),
    (0.9, 1.2815515655446005935),
    (0.975, 1.9599639845400538556),
    (0.99, 2.3263478740408407676),
    (0.999, 3.0902323061678132778),
    (0.999999, 4.7534243088170877657),
];
