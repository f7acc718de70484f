//! Slide-deck manifest audit: alt text, graphics per slide, backgrounds,
//! reading order, font sizes and colour contrast.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Deck {
    pub slides: Vec<Slide>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Slide {
    pub index: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub background: Option<Background>,
    pub elements: Vec<Element>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackgroundKind {
    Solid,
    Pattern,
    Image,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Background {
    pub kind: BackgroundKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    ProjectTitle,
    SlideTitle,
    Body,
    Caption,
    Image,
}

impl ElementKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ElementKind::ProjectTitle => "project_title",
            ElementKind::SlideTitle => "slide_title",
            ElementKind::Body => "body",
            ElementKind::Caption => "caption",
            ElementKind::Image => "image",
        }
    }

    pub fn is_title(self) -> bool {
        matches!(self, ElementKind::ProjectTitle | ElementKind::SlideTitle)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Element {
    pub id: String,
    pub kind: ElementKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub font_size: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alt_text: Option<String>,
    pub reading_order: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fg_color: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bg_color: Option<String>,
}

#[derive(Debug, thiserror::Error)]
#[error("{}: {detail}", path.display())]
pub struct ManifestError {
    pub path: PathBuf,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad colour `{0}`: expected #RRGGBB")]
pub struct BadColor(pub String);

/// Parses `#RRGGBB` (the `#` is optional) into its channels.
pub fn parse_hex(color: &str) -> Result<[u8; 3], BadColor> {
    let hex = color.strip_prefix('#').unwrap_or(color);
    if hex.len() != 6 || !hex.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(BadColor(color.to_string()));
    }
    let channel = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| BadColor(color.to_string()));
    Ok([channel(0)?, channel(2)?, channel(4)?])
}

fn relative_luminance([r, g, b]: [u8; 3]) -> f64 {
    let linear = |c: u8| {
        let c = c as f64 / 255.0;
        if c <= 0.03928 {
            c / 12.92
        } else {
            ((c + 0.055) / 1.055).powf(2.4)
        }
    };
    0.2126 * linear(r) + 0.7152 * linear(g) + 0.0722 * linear(b)
}

/// WCAG contrast ratio between two sRGB colours, in [1, 21].
pub fn contrast_ratio(fg: &str, bg: &str) -> Result<f64, BadColor> {
    let a = relative_luminance(parse_hex(fg)?);
    let b = relative_luminance(parse_hex(bg)?);
    let (light, dark) = if a >= b { (a, b) } else { (b, a) };
    Ok((light + 0.05) / (dark + 0.05))
}

impl Deck {
    pub fn from_json(text: &str, path: &Path) -> Result<Deck, ManifestError> {
        let err = |detail: String| ManifestError { path: path.to_path_buf(), detail };
        let deck: Deck = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
        deck.validate().map_err(err)?;
        Ok(deck)
    }

    pub fn load(path: &Path) -> Result<Deck, ManifestError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ManifestError { path: path.to_path_buf(), detail: e.to_string() })?;
        Self::from_json(&text, path)
    }

    fn validate(&self) -> Result<(), String> {
        for (pos, slide) in self.slides.iter().enumerate() {
            let expected = pos as u32 + 1;
            if slide.index != expected {
                return Err(format!("slide indices must run 1, 2, 3, ...; found {} at position {expected}", slide.index));
            }
            if let Some(color) = slide.background.as_ref().and_then(|b| b.color.as_deref()) {
                parse_hex(color).map_err(|e| format!("slide {expected}: {e}"))?;
            }
            let mut ids = std::collections::HashSet::new();
            for el in &slide.elements {
                let at = format!("slide {expected}, element '{}'", el.id);
                if !ids.insert(el.id.as_str()) {
                    return Err(format!("{at}: duplicate id"));
                }
                if el.reading_order == 0 {
                    return Err(format!("{at}: reading_order must be positive"));
                }
                if el.kind == ElementKind::Image {
                    if el.text.is_some() || el.font_size.is_some() || el.fg_color.is_some() || el.bg_color.is_some() {
                        return Err(format!("{at}: images carry no text, font_size or colours"));
                    }
                } else {
                    if el.text.is_none() {
                        return Err(format!("{at}: missing text"));
                    }
                    match el.font_size {
                        None => return Err(format!("{at}: missing font_size")),
                        Some(size) if !(size.is_finite() && size > 0.0) => {
                            return Err(format!("{at}: font_size must be positive"))
                        }
                        _ => {}
                    }
                    if el.alt_text.is_some() {
                        return Err(format!("{at}: alt_text is only for images"));
                    }
                }
                for color in [&el.fg_color, &el.bg_color].into_iter().flatten() {
                    parse_hex(color).map_err(|e| format!("{at}: {e}"))?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckCode {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
}

impl fmt::Display for CheckCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeckViolation {
    pub slide_index: u32,
    pub element_id: Option<String>,
    pub check_code: CheckCode,
    pub message: String,
}

/// Audit thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub max_images: usize,
    pub min_contrast_ratio: f64,
    pub project_title_size: f64,
    pub slide_title_size: f64,
    pub body_size: f64,
    pub min_caption_size: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_images: 2,
            min_contrast_ratio: 4.5,
            project_title_size: 54.0,
            slide_title_size: 32.0,
            body_size: 20.0,
            min_caption_size: 14.0,
        }
    }
}

impl From<&crate::engine::Config> for AuditConfig {
    fn from(config: &crate::engine::Config) -> Self {
        AuditConfig { min_contrast_ratio: config.min_contrast_ratio, ..AuditConfig::default() }
    }
}

pub fn audit(deck: &Deck, config: &AuditConfig) -> Vec<DeckViolation> {
    let mut out = Vec::new();
    for slide in &deck.slides {
        audit_slide(slide, config, &mut out);
    }
    out.sort_by(|a, b| {
        (a.slide_index, a.check_code, &a.element_id).cmp(&(b.slide_index, b.check_code, &b.element_id))
    });
    out
}

fn fmt_size(size: f64) -> String {
    if size.fract() == 0.0 {
        format!("{size:.0}")
    } else {
        format!("{size}")
    }
}

fn audit_slide(slide: &Slide, config: &AuditConfig, out: &mut Vec<DeckViolation>) {
    let mut push = |code: CheckCode, id: Option<&str>, message: String| {
        out.push(DeckViolation {
            slide_index: slide.index,
            element_id: id.map(str::to_string),
            check_code: code,
            message,
        })
    };
    let images: Vec<&Element> = slide.elements.iter().filter(|e| e.kind == ElementKind::Image).collect();

    for img in &images {
        if img.alt_text.as_deref().is_none_or(|t| t.trim().is_empty()) {
            push(CheckCode::D1, Some(&img.id), format!("image '{}' missing alt text", img.id));
        }
    }

    if images.len() > config.max_images {
        push(CheckCode::D2, None, format!("slide has {} images (max {})", images.len(), config.max_images));
    }

    if let Some(bg) = &slide.background {
        if bg.kind != BackgroundKind::Solid {
            let kind = if bg.kind == BackgroundKind::Pattern { "pattern" } else { "image" };
            push(CheckCode::D3, None, format!("background is a {kind}; use a solid colour"));
        }
    }

    let mut by_order: HashMap<u32, &Element> = HashMap::new();
    for el in &slide.elements {
        if let Some(first) = by_order.get(&el.reading_order) {
            push(
                CheckCode::D4,
                Some(&el.id),
                format!("reading order {} is shared by '{}' and '{}'", el.reading_order, first.id, el.id),
            );
        } else {
            by_order.insert(el.reading_order, el);
        }
    }
    let lowest = slide.elements.iter().map(|e| e.reading_order).min();
    for title in slide.elements.iter().filter(|e| e.kind.is_title()) {
        if lowest.is_some_and(|low| title.reading_order > low) {
            push(CheckCode::D4, Some(&title.id), format!("title '{}' is not first in reading order", title.id));
        }
    }
    for caption in slide.elements.iter().filter(|e| e.kind == ElementKind::Caption) {
        let next_to_image = images.iter().any(|img| img.reading_order.abs_diff(caption.reading_order) == 1);
        if !next_to_image {
            push(
                CheckCode::D4,
                Some(&caption.id),
                format!("caption '{}' is not next to an image in reading order", caption.id),
            );
        }
    }

    for el in &slide.elements {
        let Some(size) = el.font_size else { continue };
        let (ok, expected) = match el.kind {
            ElementKind::ProjectTitle => (size == config.project_title_size, fmt_size(config.project_title_size)),
            ElementKind::SlideTitle => (size == config.slide_title_size, fmt_size(config.slide_title_size)),
            ElementKind::Body => (size == config.body_size, fmt_size(config.body_size)),
            ElementKind::Caption => (size >= config.min_caption_size, format!("at least {}", fmt_size(config.min_caption_size))),
            ElementKind::Image => continue,
        };
        if !ok {
            push(
                CheckCode::D5,
                Some(&el.id),
                format!("{} '{}' font size {} (expected {expected})", el.kind.as_str(), el.id, fmt_size(size)),
            );
        }
    }

    for el in &slide.elements {
        let (Some(fg), Some(bg)) = (&el.fg_color, &el.bg_color) else { continue };
        // colours were validated at load time
        let Ok(ratio) = contrast_ratio(fg, bg) else { continue };
        if ratio < config.min_contrast_ratio {
            push(
                CheckCode::D6,
                Some(&el.id),
                format!("{} '{}' contrast {ratio:.2}:1 (min {}:1)", el.kind.as_str(), el.id, config.min_contrast_ratio),
            );
        }
    }
}
