use std::io::Write;

use borderstat::asymptotics::{alpha_limit, lambda0_limit, lambda1_limit, lambda_r_limit};
use borderstat::oracle::{enumerate_distribution, enumerate_distribution_par};
use borderstat::{c_recursive, fw_word, Counter, ErrDecimal, Evaluation, Method, PeriodSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::args::{
    Cli, Command, ConstArgs, CountArgs, DistArgs, FwArgs, SelfcheckArgs, TableFormat, TextFormat,
    Which,
};
use crate::config::Settings;
use crate::record::{Decimal, OutputRecord, Payload, Query, Row};
use crate::{svg, CliError};

type Out<'a> = &'a mut dyn Write;

pub fn run(cli: &Cli, out: Out, err: Out) -> Result<(), CliError> {
    let settings = Settings::resolve(cli)?;
    if settings.jobs > 1 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(settings.jobs.into())
            .build_global();
    }
    match &cli.command {
        Command::Fw(a) => fw(a, out),
        Command::Dist(a) => dist(a, &settings, out, err),
        Command::Const(a) => constant(a, &settings, out),
        Command::Count(a) => count(a, &settings, out),
        Command::Selfcheck(a) => selfcheck(a, out),
    }
}

fn write_json(record: &OutputRecord, out: Out) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, record)?;
    writeln!(out)?;
    Ok(())
}

fn nonempty(length: u32) -> Result<(), CliError> {
    if length == 0 {
        return Err(CliError::usage("--length must be at least 1"));
    }
    Ok(())
}

fn within_length_budget(length: u32, settings: &Settings) -> Result<(), CliError> {
    if length > settings.eval.max_length {
        return Err(CliError::budget(format!(
            "length {length} exceeds the length budget of {}",
            settings.eval.max_length
        )));
    }
    Ok(())
}

fn fw(a: &FwArgs, out: Out) -> Result<(), CliError> {
    nonempty(a.length)?;
    let set = PeriodSet::new(a.length, a.periods.iter().copied())?;
    let c = c_recursive(&set);
    let word = fw_word(&set);
    if word.class_count() != c {
        return Err(CliError::failure(format!(
            "recursion gives {c} classes but the closure gives {} for {set}",
            word.class_count()
        )));
    }
    let g_count = match a.alphabet {
        Some(0) => return Err(CliError::usage("--alphabet must be at least 1")),
        Some(l) => Some(borderstat::fw::g_count(l, &set).to_string()),
        None => None,
    };
    let record = OutputRecord::new(
        "fw",
        Query {
            alphabet: a.alphabet,
            length: Some(a.length),
            periods: Some(a.periods.clone()),
            ..Query::default()
        },
        Payload::Fw {
            c,
            word: word.to_letters(),
            g_count: g_count.clone(),
        },
        "recurrence",
    );
    match a.format {
        TextFormat::Json => write_json(&record, out),
        TextFormat::Text => {
            writeln!(out, "c = {c}")?;
            writeln!(out, "word = {}", word.to_letters())?;
            if let Some(g) = g_count {
                writeln!(out, "g = {g}")?;
            }
            Ok(())
        }
    }
}

fn dist(a: &DistArgs, settings: &Settings, out: Out, err: Out) -> Result<(), CliError> {
    let n = a.length;
    nonempty(n)?;
    within_length_budget(n, settings)?;
    let counter = Counter::new(a.alphabet)?;
    let parallel = settings.eval.parallel;
    let exact = if parallel {
        counter.exact_distribution_par(n)?
    } else {
        counter.exact_distribution(n)?
    };
    let oracle_agrees = if a.oracle {
        let table = if parallel {
            enumerate_distribution_par(a.alphabet, n, settings.enumeration)?
        } else {
            enumerate_distribution(a.alphabet, n, settings.enumeration)?
        };
        Some(table.counts == exact.counts)
    } else {
        None
    };

    let total = BigInt::from(exact.total.clone());
    let mut rows: Vec<Row> = exact
        .counts
        .iter()
        .enumerate()
        .map(|(r, count)| {
            let q = BigRational::new(BigInt::from(count.clone()), total.clone());
            let dec = ErrDecimal::exact(&q, settings.digits);
            Row {
                r: r as u32,
                period: n - r as u32,
                count: count.to_string(),
                probability_num: q.numer().to_string(),
                probability_den: q.denom().to_string(),
                probability_dec: Decimal::from(&dec),
            }
        })
        .collect();
    if a.by_period {
        rows.reverse();
    }

    if let Some(path) = &a.svg {
        let bars: Vec<(u32, f64)> = rows
            .iter()
            .map(|row| {
                let label = if a.by_period { row.period } else { row.r };
                (label, row.probability_dec.value.parse().unwrap_or(0.0))
            })
            .collect();
        let (title, x_label) = if a.by_period {
            (
                format!("Least period, alphabet {}, length {n}", a.alphabet),
                "least period",
            )
        } else {
            (
                format!("Longest border, alphabet {}, length {n}", a.alphabet),
                "longest border",
            )
        };
        std::fs::write(path, svg::bar_chart(&title, x_label, &bars))?;
    }

    let record = OutputRecord::new(
        "dist",
        Query {
            alphabet: Some(a.alphabet),
            length: Some(n),
            digits: Some(settings.digits),
            by_period: Some(a.by_period),
            ..Query::default()
        },
        Payload::Distribution {
            total: exact.total.to_string(),
            rows,
            oracle_agrees,
        },
        if a.oracle { "oracle" } else { "recurrence" },
    );
    match a.format {
        TableFormat::Json => write_json(&record, out)?,
        TableFormat::Csv => write_csv(&record, a.by_period, out)?,
    }
    match oracle_agrees {
        Some(true) => {
            writeln!(
                err,
                "oracle: enumeration of {} words agrees with the recurrence",
                exact.total
            )?;
            Ok(())
        }
        Some(false) => Err(CliError::failure("oracle and recurrence counts differ")),
        None => Ok(()),
    }
}

fn write_csv(record: &OutputRecord, by_period: bool, out: Out) -> Result<(), CliError> {
    let Payload::Distribution { rows, .. } = &record.result else {
        unreachable!("only distributions are tabular");
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let index = if by_period { "period" } else { "r" };
    w.write_record([
        index,
        "count",
        "probability_num",
        "probability_den",
        "probability_dec",
    ])?;
    for row in rows {
        let i = if by_period { row.period } else { row.r };
        w.write_record([
            i.to_string().as_str(),
            &row.count,
            &row.probability_num,
            &row.probability_den,
            &row.probability_dec.value,
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn method_name(method: &Method) -> &'static str {
    match method {
        Method::Series { .. } => "series",
        Method::FiniteLength { .. } => "recurrence",
        Method::TailOnly => "bound",
    }
}

fn constant(a: &ConstArgs, settings: &Settings, out: Out) -> Result<(), CliError> {
    let digits = settings.digits;
    let l = a.alphabet;
    let counter = Counter::new(l)?;
    let eval: Evaluation = match (a.which, a.r) {
        (Which::Alpha, Some(_)) => {
            return Err(CliError::usage("--r only applies to --which lambda"))
        }
        (Which::Alpha, None) => alpha_limit(&counter, digits, &settings.eval)?,
        (Which::Lambda, Some(0)) => lambda0_limit(l, digits)?,
        (Which::Lambda, Some(1)) => lambda1_limit(l, digits)?,
        (Which::Lambda, Some(r)) => lambda_r_limit(&counter, r, digits, &settings.eval)?,
        (Which::Lambda, None) => return Err(CliError::usage("--which lambda needs --r")),
    };
    let shown = eval.value.rounded(digits)?;
    let (length, terms) = match eval.method {
        Method::Series { terms } => (None, Some(terms)),
        Method::FiniteLength { length } => (Some(length), None),
        Method::TailOnly => (None, None),
    };
    let method = method_name(&eval.method);
    let record = OutputRecord::new(
        "const",
        Query {
            alphabet: Some(l),
            which: Some(match a.which {
                Which::Alpha => "alpha".into(),
                Which::Lambda => "lambda".into(),
            }),
            r: a.r,
            digits: Some(digits),
            ..Query::default()
        },
        Payload::Constant {
            value: Decimal::from(&shown),
            enclosure: Decimal::from(&eval.value),
            length,
            terms,
        },
        method,
    );
    match a.format {
        TextFormat::Json => write_json(&record, out),
        TextFormat::Text => {
            writeln!(out, "{}", shown.fixed())?;
            writeln!(out, "err <= {}", shown.err_upper_string())?;
            match eval.method {
                Method::Series { terms } => writeln!(out, "method: series, {terms} terms")?,
                Method::FiniteLength { length } => {
                    writeln!(out, "method: recurrence at length {length}")?
                }
                Method::TailOnly => writeln!(out, "method: bound l^-r")?,
            }
            Ok(())
        }
    }
}

fn count(a: &CountArgs, settings: &Settings, out: Out) -> Result<(), CliError> {
    let n = a.length;
    nonempty(n)?;
    within_length_budget(n, settings)?;
    let set = match (&a.periods, a.max_border) {
        (Some(periods), _) => PeriodSet::new(n, periods.iter().copied())?,
        (None, Some(r)) if r < n => PeriodSet::new(n, [n - r])?,
        (None, Some(r)) => {
            return Err(CliError::usage(format!(
                "--max-border {r} must be below --length {n}"
            )))
        }
        (None, None) => return Err(CliError::usage("give --periods or --max-border")),
    };
    let counter = Counter::new(a.alphabet)?;
    let m = set.min_period();
    let (f, method) = match a.max_border {
        Some(r) if r <= 1 => (counter.max_border_count(n, r), "recurrence"),
        _ if m <= n / 2 + 1 => (counter.f_count(&set), "moebius"),
        _ => (counter.f_count(&set), "recurrence"),
    };
    let g = counter.g_count(&set);
    let c = counter.c(&set);
    let record = OutputRecord::new(
        "count",
        Query {
            alphabet: Some(a.alphabet),
            length: Some(n),
            periods: a.periods.clone(),
            max_border: a.max_border,
            ..Query::default()
        },
        Payload::Count {
            f: f.to_string(),
            g: g.to_string(),
            c,
            least_period: m,
        },
        method,
    );
    match a.format {
        TextFormat::Json => write_json(&record, out),
        TextFormat::Text => {
            writeln!(out, "F = {f}")?;
            writeln!(out, "G = {g}")?;
            Ok(())
        }
    }
}

fn selfcheck(a: &SelfcheckArgs, out: Out) -> Result<(), CliError> {
    let mut rng = StdRng::seed_from_u64(a.seed);
    let mut mismatches = Vec::new();
    for _ in 0..a.count {
        let n = rng.gen_range(1..=a.max_length);
        let k = rng.gen_range(0..=4);
        let periods: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        let set = PeriodSet::new(n, periods)?;
        let word = fw_word(&set);
        let has_all = set
            .periods()
            .iter()
            .all(|&p| borderstat::word::has_period(word.classes(), p as usize));
        if c_recursive(&set) != word.class_count() || !has_all {
            mismatches.push(set.to_string());
        }
    }
    let record = OutputRecord::new(
        "selfcheck",
        Query {
            seed: Some(a.seed),
            count: Some(a.count),
            ..Query::default()
        },
        Payload::Selfcheck {
            checked: a.count,
            mismatches: mismatches.clone(),
        },
        "recurrence",
    );
    match a.format {
        TextFormat::Json => write_json(&record, out)?,
        TextFormat::Text => {
            writeln!(
                out,
                "checked {} period sets, {} mismatches",
                a.count,
                mismatches.len()
            )?;
            for m in &mismatches {
                writeln!(out, "mismatch: {m}")?;
            }
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::failure(format!(
            "{} mismatches",
            mismatches.len()
        )))
    }
}
