//! Seed tables for the packaged region sets.
//!
//! Each entry: (name, acronym, centroid lon, centroid lat, relative size
//! weight, coastal). Centroids are approximate; the packaged polygons are
//! simplified blobs synthesized around them (see `geo.rs`), sized so that
//! neighbours never overlap.

pub struct RegionSeed {
    pub name: &'static str,
    pub acronym: &'static str,
    pub lon: f64,
    pub lat: f64,
    pub weight: f64,
    pub coastal: bool,
}

macro_rules! seed {
    ($name:literal, $acr:literal, $lon:expr, $lat:expr, $w:expr, $coastal:expr) => {
        RegionSeed {
            name: $name,
            acronym: $acr,
            lon: $lon,
            lat: $lat,
            weight: $w,
            coastal: $coastal,
        }
    };
}

pub const EUROPE: &[RegionSeed] = &[
    seed!("Iceland", "ISL", -18.5, 64.9, 1.0, true),
    seed!("Norway", "NOR", 9.0, 61.5, 3.2, true),
    seed!("Sweden", "SWE", 15.5, 62.0, 4.1, true),
    seed!("Finland", "FIN", 26.0, 64.2, 3.2, true),
    seed!("Denmark", "DNK", 9.5, 56.0, 0.43, true),
    seed!("United Kingdom", "GBR", -2.0, 53.0, 2.4, true),
    seed!("Ireland", "IRL", -8.0, 53.2, 0.7, true),
    seed!("Portugal", "PRT", -8.1, 39.6, 0.9, true),
    seed!("Spain", "ESP", -3.7, 40.2, 5.0, true),
    seed!("France", "FRA", 2.5, 46.6, 5.5, true),
    seed!("Belgium", "BEL", 4.5, 50.6, 0.3, true),
    seed!("Netherlands", "NLD", 5.3, 52.4, 0.4, true),
    seed!("Luxembourg", "LUX", 6.1, 49.8, 0.08, false),
    seed!("Germany", "DEU", 10.4, 51.2, 3.6, true),
    seed!("Switzerland", "CHE", 8.2, 46.8, 0.41, false),
    seed!("Austria", "AUT", 14.1, 47.6, 0.8, false),
    seed!("Italy", "ITA", 12.8, 42.8, 3.0, true),
    seed!("Czechia", "CZE", 15.3, 49.8, 0.8, false),
    seed!("Slovakia", "SVK", 19.5, 48.7, 0.5, false),
    seed!("Poland", "POL", 19.4, 52.1, 3.1, true),
    seed!("Hungary", "HUN", 19.4, 47.2, 0.9, false),
    seed!("Slovenia", "SVN", 14.8, 46.1, 0.2, true),
    seed!("Croatia", "HRV", 16.4, 45.4, 0.57, true),
    seed!("Bosnia and Herzegovina", "BIH", 17.8, 44.2, 0.5, true),
    seed!("Serbia", "SRB", 20.8, 44.2, 0.77, false),
    seed!("Montenegro", "MNE", 19.3, 42.8, 0.14, true),
    seed!("Albania", "ALB", 20.0, 41.1, 0.29, true),
    seed!("North Macedonia", "MKD", 21.7, 41.6, 0.25, false),
    seed!("Greece", "GRC", 22.0, 39.3, 1.3, true),
    seed!("Bulgaria", "BGR", 25.2, 42.7, 1.1, true),
    seed!("Romania", "ROU", 24.9, 45.9, 2.4, true),
    seed!("Moldova", "MDA", 28.5, 47.2, 0.34, false),
    seed!("Ukraine", "UKR", 31.2, 49.0, 6.0, true),
    seed!("Belarus", "BLR", 28.0, 53.5, 2.1, false),
    seed!("Lithuania", "LTU", 23.9, 55.3, 0.65, true),
    seed!("Latvia", "LVA", 24.9, 56.9, 0.64, true),
    seed!("Estonia", "EST", 25.5, 58.7, 0.45, true),
];

pub const WORLD: &[RegionSeed] = &[
    seed!("United States", "USA", -98.0, 39.0, 9.6, true),
    seed!("Canada", "CAN", -106.0, 56.0, 10.0, true),
    seed!("Mexico", "MEX", -102.0, 23.5, 2.0, true),
    seed!("Guatemala", "GTM", -90.4, 15.6, 0.11, true),
    seed!("Cuba", "CUB", -79.0, 21.5, 0.11, true),
    seed!("Brazil", "BRA", -53.0, -10.0, 8.5, true),
    seed!("Argentina", "ARG", -64.0, -35.0, 2.8, true),
    seed!("Chile", "CHL", -71.5, -37.0, 0.75, true),
    seed!("Peru", "PER", -75.0, -10.0, 1.29, true),
    seed!("Colombia", "COL", -73.0, 4.0, 1.14, true),
    seed!("Venezuela", "VEN", -66.0, 7.5, 0.91, true),
    seed!("Bolivia", "BOL", -64.0, -17.0, 1.1, false),
    seed!("Ecuador", "ECU", -78.5, -1.5, 0.28, true),
    seed!("Paraguay", "PRY", -58.0, -23.3, 0.41, false),
    seed!("Uruguay", "URY", -56.0, -33.0, 0.18, true),
    seed!("Greenland", "GRL", -42.0, 72.0, 2.2, true),
    seed!("Iceland", "ISL", -18.5, 64.9, 0.1, true),
    seed!("United Kingdom", "GBR", -2.0, 53.0, 0.24, true),
    seed!("Ireland", "IRL", -8.0, 53.2, 0.07, true),
    seed!("Portugal", "PRT", -8.1, 39.6, 0.09, true),
    seed!("Spain", "ESP", -3.7, 40.2, 0.5, true),
    seed!("France", "FRA", 2.5, 46.6, 0.55, true),
    seed!("Germany", "DEU", 10.4, 51.2, 0.36, true),
    seed!("Italy", "ITA", 12.8, 42.8, 0.3, true),
    seed!("Norway", "NOR", 9.0, 61.5, 0.32, true),
    seed!("Sweden", "SWE", 15.5, 62.0, 0.41, true),
    seed!("Finland", "FIN", 26.0, 64.2, 0.32, true),
    seed!("Poland", "POL", 19.4, 52.1, 0.31, true),
    seed!("Ukraine", "UKR", 31.2, 49.0, 0.6, true),
    seed!("Romania", "ROU", 24.9, 45.9, 0.24, true),
    seed!("Greece", "GRC", 22.0, 39.3, 0.13, true),
    seed!("Turkey", "TUR", 35.0, 39.0, 0.78, true),
    seed!("Russia", "RUS", 95.0, 61.0, 17.1, true),
    seed!("Kazakhstan", "KAZ", 67.0, 48.0, 2.7, false),
    seed!("Egypt", "EGY", 30.0, 26.5, 1.0, true),
    seed!("Libya", "LBY", 17.5, 27.0, 1.76, true),
    seed!("Algeria", "DZA", 2.6, 28.0, 2.38, true),
    seed!("Morocco", "MAR", -6.5, 32.0, 0.45, true),
    seed!("Nigeria", "NGA", 8.0, 9.5, 0.92, true),
    seed!("Ethiopia", "ETH", 39.6, 8.6, 1.1, false),
    seed!("Kenya", "KEN", 37.8, 0.5, 0.58, true),
    seed!("Democratic Republic of the Congo", "COD", 23.0, -3.0, 2.34, true),
    seed!("Angola", "AGO", 17.5, -12.5, 1.25, true),
    seed!("South Africa", "ZAF", 25.0, -29.0, 1.22, true),
    seed!("Tanzania", "TZA", 34.8, -6.4, 0.95, true),
    seed!("Sudan", "SDN", 30.0, 15.5, 1.86, true),
    seed!("Chad", "TCD", 18.7, 15.4, 1.28, false),
    seed!("Niger", "NER", 9.4, 17.4, 1.27, false),
    seed!("Mali", "MLI", -3.5, 17.5, 1.24, false),
    seed!("Mauritania", "MRT", -10.5, 20.2, 1.03, true),
    seed!("Saudi Arabia", "SAU", 44.5, 24.0, 2.15, true),
    seed!("Iraq", "IRQ", 43.7, 33.0, 0.44, true),
    seed!("Iran", "IRN", 53.0, 32.5, 1.65, true),
    seed!("Pakistan", "PAK", 69.3, 30.0, 0.88, true),
    seed!("Afghanistan", "AFG", 66.0, 33.9, 0.65, false),
    seed!("India", "IND", 79.0, 22.0, 3.29, true),
    seed!("China", "CHN", 104.0, 35.0, 9.6, true),
    seed!("Mongolia", "MNG", 103.0, 46.9, 1.56, false),
    seed!("Japan", "JPN", 138.0, 36.5, 0.38, true),
    seed!("South Korea", "KOR", 127.8, 36.3, 0.1, true),
    seed!("Thailand", "THA", 101.0, 15.5, 0.51, true),
    seed!("Myanmar", "MMR", 96.0, 21.0, 0.68, true),
    seed!("Vietnam", "VNM", 106.3, 16.5, 0.33, true),
    seed!("Malaysia", "MYS", 102.0, 4.2, 0.33, true),
    seed!("Indonesia", "IDN", 117.0, -2.5, 1.9, true),
    seed!("Philippines", "PHL", 122.0, 12.5, 0.3, true),
    seed!("Australia", "AUS", 134.0, -25.0, 7.7, true),
    seed!("New Zealand", "NZL", 172.0, -42.0, 0.27, true),
    seed!("Papua New Guinea", "PNG", 144.3, -6.5, 0.46, true),
    seed!("Madagascar", "MDG", 46.7, -19.4, 0.59, true),
    seed!("Mozambique", "MOZ", 35.5, -17.3, 0.8, true),
    seed!("Namibia", "NAM", 17.2, -22.0, 0.82, true),
    seed!("Botswana", "BWA", 24.7, -22.3, 0.58, false),
    seed!("Zambia", "ZMB", 27.8, -13.5, 0.75, false),
    seed!("Somalia", "SOM", 45.9, 5.2, 0.64, true),
];

pub const US: &[RegionSeed] = &[
    seed!("Alabama", "AL", -86.8, 32.8, 5.2, true),
    seed!("Alaska", "AK", -152.0, 64.0, 66.0, true),
    seed!("Arizona", "AZ", -111.7, 34.3, 11.4, false),
    seed!("Arkansas", "AR", -92.4, 34.8, 5.3, false),
    seed!("California", "CA", -119.4, 37.2, 16.4, true),
    seed!("Colorado", "CO", -105.5, 39.0, 10.4, false),
    seed!("Connecticut", "CT", -72.7, 41.6, 0.55, true),
    seed!("Delaware", "DE", -75.5, 39.0, 0.25, true),
    seed!("Florida", "FL", -81.7, 28.6, 6.6, true),
    seed!("Georgia", "GA", -83.4, 32.6, 5.9, true),
    seed!("Hawaii", "HI", -157.5, 20.3, 1.1, true),
    seed!("Idaho", "ID", -114.6, 44.4, 8.4, false),
    seed!("Illinois", "IL", -89.2, 40.0, 5.8, false),
    seed!("Indiana", "IN", -86.3, 39.9, 3.6, false),
    seed!("Iowa", "IA", -93.5, 42.1, 5.6, false),
    seed!("Kansas", "KS", -98.4, 38.5, 8.2, false),
    seed!("Kentucky", "KY", -85.3, 37.5, 4.0, false),
    seed!("Louisiana", "LA", -92.0, 31.0, 5.2, true),
    seed!("Maine", "ME", -69.2, 45.4, 3.5, true),
    seed!("Maryland", "MD", -76.8, 39.05, 1.2, true),
    seed!("Massachusetts", "MA", -71.8, 42.3, 1.05, true),
    seed!("Michigan", "MI", -85.0, 44.3, 9.7, false),
    seed!("Minnesota", "MN", -94.3, 46.3, 8.7, false),
    seed!("Mississippi", "MS", -89.7, 32.7, 4.8, true),
    seed!("Missouri", "MO", -92.5, 38.4, 7.0, false),
    seed!("Montana", "MT", -109.6, 47.0, 14.7, false),
    seed!("Nebraska", "NE", -99.8, 41.5, 7.7, false),
    seed!("Nevada", "NV", -116.6, 39.3, 11.1, false),
    seed!("New Hampshire", "NH", -71.6, 43.7, 0.93, true),
    seed!("New Jersey", "NJ", -74.7, 40.2, 0.87, true),
    seed!("New Mexico", "NM", -106.0, 34.4, 12.2, false),
    seed!("New York", "NY", -75.5, 43.0, 5.4, true),
    seed!("North Carolina", "NC", -79.4, 35.5, 5.4, true),
    seed!("North Dakota", "ND", -100.5, 47.4, 7.1, false),
    seed!("Ohio", "OH", -82.8, 40.3, 4.5, false),
    seed!("Oklahoma", "OK", -97.5, 35.6, 7.0, false),
    seed!("Oregon", "OR", -120.6, 43.9, 9.8, true),
    seed!("Pennsylvania", "PA", -77.8, 40.9, 4.6, false),
    seed!("Rhode Island", "RI", -71.5, 41.7, 0.15, true),
    seed!("South Carolina", "SC", -80.9, 33.9, 3.2, true),
    seed!("South Dakota", "SD", -100.2, 44.4, 7.7, false),
    seed!("Tennessee", "TN", -86.3, 35.8, 4.2, false),
    seed!("Texas", "TX", -99.3, 31.5, 26.9, true),
    seed!("Utah", "UT", -111.7, 39.3, 8.5, false),
    seed!("Vermont", "VT", -72.7, 44.1, 0.96, false),
    seed!("Virginia", "VA", -78.8, 37.5, 4.3, true),
    seed!("Washington", "WA", -120.4, 47.4, 7.1, true),
    seed!("West Virginia", "WV", -80.6, 38.6, 2.4, false),
    seed!("Wisconsin", "WI", -89.8, 44.6, 6.5, false),
    seed!("Wyoming", "WY", -107.6, 43.0, 9.8, false),
];

pub const CHINA: &[RegionSeed] = &[
    seed!("Beijing", "BJ", 116.4, 40.2, 0.164, false),
    seed!("Tianjin", "TJ", 117.3, 39.1, 0.119, true),
    seed!("Hebei", "HE", 115.4, 38.6, 1.88, true),
    seed!("Shanxi", "SX", 112.3, 37.6, 1.56, false),
    seed!("Inner Mongolia", "NM", 113.0, 44.5, 11.8, false),
    seed!("Liaoning", "LN", 122.6, 41.3, 1.48, true),
    seed!("Jilin", "JL", 126.2, 43.7, 1.91, false),
    seed!("Heilongjiang", "HL", 128.0, 47.9, 4.54, false),
    seed!("Shanghai", "SH", 121.4, 31.1, 0.063, true),
    seed!("Jiangsu", "JS", 119.5, 33.0, 1.02, true),
    seed!("Zhejiang", "ZJ", 120.1, 29.2, 1.05, true),
    seed!("Anhui", "AH", 117.2, 31.8, 1.40, false),
    seed!("Fujian", "FJ", 118.0, 26.1, 1.24, true),
    seed!("Jiangxi", "JX", 115.7, 27.6, 1.67, false),
    seed!("Shandong", "SD", 118.2, 36.3, 1.57, true),
    seed!("Henan", "HA", 113.6, 33.9, 1.67, false),
    seed!("Hubei", "HB", 112.3, 30.9, 1.86, false),
    seed!("Hunan", "HN", 111.7, 27.6, 2.12, false),
    seed!("Guangdong", "GD", 113.4, 23.3, 1.80, true),
    seed!("Guangxi", "GX", 108.8, 23.8, 2.36, true),
    seed!("Hainan", "HI", 109.7, 19.2, 0.354, true),
    seed!("Chongqing", "CQ", 107.9, 30.1, 0.824, false),
    seed!("Sichuan", "SC", 102.7, 30.6, 4.86, false),
    seed!("Guizhou", "GZ", 106.9, 26.8, 1.76, false),
    seed!("Yunnan", "YN", 101.5, 25.0, 3.94, false),
    seed!("Tibet", "XZ", 88.0, 31.7, 12.3, false),
    seed!("Shaanxi", "SN", 108.9, 35.2, 2.06, false),
    seed!("Gansu", "GS", 100.5, 37.8, 4.25, false),
    seed!("Qinghai", "QH", 96.0, 35.7, 7.22, false),
    seed!("Ningxia", "NX", 106.2, 37.3, 0.664, false),
    seed!("Xinjiang", "XJ", 85.0, 41.5, 16.6, false),
];
